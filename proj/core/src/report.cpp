#include "class16/report.hpp"

#include <sstream>

namespace class16::cli {

namespace {

const Int kJsonSafeLimit = Int(1) << 53;

}  // namespace

ordered_json encode_int(const Int& v) {
    if (abs(v) < kJsonSafeLimit) {
        return ordered_json(static_cast<long long>(v.get_si()));
    }
    return ordered_json(v.get_str());
}

Int decode_int(const ordered_json& j) {
    if (j.is_number_integer()) {
        return Int(static_cast<long>(j.get<long long>()));
    }
    if (j.is_string()) {
        return Int(j.get<std::string>());
    }
    throw domain_error("decode_int: expected an integer or a decimal string");
}

ordered_json report_to_json(const verifier::PrimeReport& r, bool include_timing) {
    ordered_json j;
    j["p"] = encode_int(r.p);
    j["m"] = encode_int(r.m);
    j["h_plus"] = encode_int(r.h_plus);
    j["h_minus_oracle"] = encode_int(r.h_minus_oracle);
    j["h_minus_zagier"] = encode_int(r.h_minus_zagier);

    ordered_json pell;
    pell["d"] = r.pell.d.get_str();
    pell["c"] = r.pell.c.get_str();
    ordered_json digits;
    digits["d"] = static_cast<long long>(decimal_digits(r.pell.d));
    digits["c"] = static_cast<long long>(decimal_digits(r.pell.c));
    pell["digits"] = std::move(digits);
    j["pell"] = std::move(pell);

    ordered_json classes = ordered_json::array();
    for (const auto& ct : r.classes) {
        ordered_json c;
        ordered_json rep;
        rep["a"] = encode_int(ct.rep.a);
        rep["b"] = encode_int(ct.rep.b);
        c["rep"] = std::move(rep);
        c["chi"] = ct.chi;
        c["n"] = encode_int(ct.n_cf);
        c["t"] = encode_int(ct.t);
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);

    ordered_json checks;
    checks["mod16"] = r.checks.mod16;
    checks["guy"] = r.checks.guy;
    checks["thmz2"] = r.checks.thmz2;
    checks["williams4"] = r.checks.williams4;
    checks["williams8"] = r.checks.williams8;
    checks["mordell"] = r.checks.mordell;
    checks["inverses"] = r.checks.inverses;
    checks["mod8"] = r.checks.mod8_uniformity;
    j["checks"] = std::move(checks);

    if (include_timing) {
        j["timing_ms"] = r.timing_ms;
    }
    j["version"] = 1;
    return j;
}

std::string failed_checks(const verifier::CheckResults& c) {
    std::ostringstream out;
    auto add = [&out, first = true](const char* name, bool ok) mutable {
        if (ok) return;
        if (!first) out << ',';
        out << name;
        first = false;
    };
    add("mod16", c.mod16);
    add("guy", c.guy);
    add("thmz2", c.thmz2);
    add("williams4", c.williams4);
    add("williams8", c.williams8);
    add("mordell", c.mordell);
    add("inverses", c.inverses);
    add("mod8", c.mod8_uniformity);
    return out.str();
}

std::string report_to_text(const verifier::PrimeReport& r) {
    std::ostringstream out;
    out << "p = " << r.p.get_str() << "\n";
    out << "m(p) = " << r.m.get_str() << "\n";
    out << "pell: d = " << r.pell.d.get_str() << ", c = " << r.pell.c.get_str()
        << "  (" << decimal_digits(r.pell.d) << "/" << decimal_digits(r.pell.c)
        << " digits)\n";
    out << "h(p) = " << r.h_plus.get_str() << "\n";
    out << "h(-p) = " << r.h_minus_oracle.get_str() << " (oracle), "
        << r.h_minus_zagier.get_str() << " (zagier)\n";
    out << "classes:\n";
    for (const auto& ct : r.classes) {
        out << "  (" << ct.rep.a.get_str() << " + sqrt(p), " << ct.rep.b.get_str()
            << ")  chi=" << (ct.chi > 0 ? "+1" : "-1") << "  n=" << ct.n_cf.get_str()
            << "  t=" << ct.t.get_str() << "\n";
    }
    std::string bad = failed_checks(r.checks);
    if (bad.empty()) {
        out << "checks: all 8 pass\n";
    } else {
        out << "checks FAILED: " << bad << "\n";
    }
    out << "time: " << r.timing_ms << " ms\n";
    return out.str();
}

std::string sweep_line(const verifier::PrimeReport& r) {
    std::ostringstream out;
    out << "p=" << r.p.get_str() << " h+=" << r.h_plus.get_str()
        << " h-=" << r.h_minus_oracle.get_str() << " m=" << r.m.get_str();
    std::string bad = failed_checks(r.checks);
    if (bad.empty()) {
        out << " ok";
    } else {
        out << " FAIL[" << bad << "]";
    }
    return out.str();
}

std::string csv_header() { return "p,h_plus,h_minus,m,mod16_ok,all_ok,ms"; }

std::string csv_row(const verifier::PrimeReport& r) {
    std::ostringstream out;
    out << r.p.get_str() << ',' << r.h_plus.get_str() << ','
        << r.h_minus_oracle.get_str() << ',' << r.m.get_str() << ','
        << (r.checks.mod16 ? 1 : 0) << ',' << (r.checks.all() ? 1 : 0) << ','
        << r.timing_ms;
    return out.str();
}

std::string format_negcf(const contfrac::NegCF& cf) {
    std::ostringstream out;
    out << '[' << cf.head.get_str() << ';';
    if (!cf.preperiod.empty()) {
        out << ' ';
        for (std::size_t i = 0; i < cf.preperiod.size(); ++i) {
            if (i) out << ',';
            out << cf.preperiod[i].get_str();
        }
    }
    out << " (";
    for (std::size_t i = 0; i < cf.period.size(); ++i) {
        if (i) out << ',';
        out << cf.period[i].get_str();
    }
    out << ")]";
    return out.str();
}

}  // namespace class16::cli
