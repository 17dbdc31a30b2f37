#include "qzeta/zero_table.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace qzeta {

const char* to_string(ZeroKind kind) {
    switch (kind) {
        case ZeroKind::Sin: return "sin";
        case ZeroKind::Cos: return "cos";
        case ZeroKind::Bessel: return "bessel";
    }
    return "?";
}

ZeroKind parse_zero_kind(const std::string& name) {
    if (name == "sin") return ZeroKind::Sin;
    if (name == "cos") return ZeroKind::Cos;
    if (name.rfind("bessel", 0) == 0) return ZeroKind::Bessel;
    throw Error(ErrorKind::Config, "unknown zero kind: " + name);
}

namespace {

std::string kind_label(const ZeroTable& t) {
    if (t.kind != ZeroKind::Bessel) return to_string(t.kind);
    return "bessel(" + t.nu.str(17) + ")";
}

}  // namespace

void write_csv(std::ostream& out, const ZeroTable& t) {
    out << "kind,q,k,zero,residual,digits\n";
    for (const auto& e : t.entries) {
        out << kind_label(t) << ',' << to_string(t.q) << ',' << e.k << ',' << e.value.str(static_cast<int>(t.digits))
            << ',' << e.residual.str(6) << ',' << t.digits << '\n';
    }
}

ZeroTable read_csv(std::istream& in) {
    ZeroTable t;
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::Config, "empty zero table");
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cols.push_back(c);
        if (cols.size() != 6) throw Error(ErrorKind::Config, "bad zero table row: " + line);
        if (first) {
            t.kind = parse_zero_kind(cols[0]);
            if (t.kind == ZeroKind::Bessel) {
                auto open = cols[0].find('('), close = cols[0].find(')');
                PrecisionScope ps(bits_for_digits(40));
                t.nu = Real(cols[0].substr(open + 1, close - open - 1));
            }
            t.q = parse_rational(cols[1]);
            t.digits = std::stol(cols[5]);
            first = false;
        }
        PrecisionScope ps(bits_for_digits(t.digits + kGuardDigits));
        ZeroEntry e;
        e.k = std::stol(cols[2]);
        e.value = Real(cols[3]);
        e.residual = Real(cols[4]);
        t.entries.push_back(e);
    }
    if (!first) {
        PrecisionScope ps(bits_for_digits(t.digits + kGuardDigits));
        Real q(t.q);
        Real omq = Real(1) - q;
        if (t.kind == ZeroKind::Sin) t.asymptotic_constant = pow(q, Real("-1.5")) / omq;
        else if (t.kind == ZeroKind::Cos) t.asymptotic_constant = pow(q, Real("-0.5")) / omq;
        else t.asymptotic_constant = Real(2) * pow(q, -t.nu - Real(1));
    }
    return t;
}

}  // namespace qzeta
