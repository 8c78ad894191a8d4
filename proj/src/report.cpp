#include "lcgauss/report.hpp"

#include <algorithm>
#include <cmath>

#include "lcgauss/minkowski.hpp"

namespace lcgauss {

namespace {

const char* const kRealFields[] = {"k1_plus", "k2_plus", "k1_minus", "k2_minus", "H_plus",
                                   "H_minus", "K_plus",  "K_minus",  "H_vec_norm_sq"};
const char* const kFlagFields[] = {"umbilic_plus", "umbilic_minus", "flat_plus", "flat_minus", "maximal"};

std::array<double, 9> reals(const CurvatureReport& r) {
    return {r.plus.k1, r.plus.k2, r.minus.k1, r.minus.k2, r.plus.H, r.minus.H, r.plus.K, r.minus.K, r.H_vec_norm_sq};
}

std::array<bool, 5> flags(const CurvatureFlags& f) {
    return {f.umbilic_plus, f.umbilic_minus, f.flat_plus, f.flat_minus, f.maximal};
}

// nlohmann prints doubles with its own shortest representation; reals are
// written here so every output path shares %.17g.
void write(std::string& out, const nlohmann::ordered_json& j, int indent, int depth) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    const char* colon = indent > 0 ? ": " : ":";
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{";
        out += nl;
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) {
                out += ",";
                out += nl;
            }
            first = false;
            out += pad;
            out += nlohmann::ordered_json(it.key()).dump();
            out += colon;
            write(out, it.value(), indent, depth + 1);
        }
        out += nl;
        out += close_pad;
        out += "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        const bool flat = std::none_of(j.begin(), j.end(), [](const auto& x) { return x.is_structured(); });
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += indent > 0 ? ", " : ",";
                write(out, j[i], indent, depth + 1);
            }
            out += "]";
            return;
        }
        out += "[";
        out += nl;
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) {
                out += ",";
                out += nl;
            }
            out += pad;
            write(out, j[i], indent, depth + 1);
        }
        out += nl;
        out += close_pad;
        out += "]";
    } else if (j.is_number_float()) {
        const double x = j.get<double>();
        out += std::isfinite(x) ? format_real(x) : "null";
    } else {
        out += j.dump();
    }
}

}  // namespace

nlohmann::ordered_json to_json(const CurvatureReport& r) {
    nlohmann::ordered_json j;
    const auto v = reals(r);
    for (std::size_t i = 0; i < v.size(); ++i) j[kRealFields[i]] = v[i];
    nlohmann::ordered_json f;
    const auto b = flags(r.flags);
    for (std::size_t i = 0; i < b.size(); ++i) f[kFlagFields[i]] = b[i];
    j["flags"] = f;
    j["tol"] = r.tol;
    return j;
}

std::string csv_header() {
    std::string out;
    for (const char* name : kRealFields) {
        out += name;
        out += ',';
    }
    for (const char* name : kFlagFields) {
        out += name;
        out += ',';
    }
    out += "tol";
    return out;
}

std::string csv_row(const CurvatureReport& r) {
    std::string out;
    for (double x : reals(r)) {
        out += format_real(x);
        out += ',';
    }
    for (bool b : flags(r.flags)) out += b ? "1," : "0,";
    out += format_real(r.tol);
    return out;
}

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
    std::string out;
    write(out, j, indent, 0);
    return out;
}

}  // namespace lcgauss
