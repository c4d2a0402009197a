#include "textio.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace latpoly {

namespace {

long parse_long(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        raise(ErrorKind::Parse, std::string(what) + " must be an integer, got \"" + s + "\"");
    }
}

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// cursor over a scalar expression; spaces are insignificant
struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_word(const char* w) {
        skip();
        size_t n = std::char_traits<char>::length(w);
        if (s.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        raise(ErrorKind::Parse, what + " in \"" + s + "\" at offset " + std::to_string(i));
    }

    std::string digits() {
        skip();
        size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == b) fail("expected digits");
        return s.substr(b, i - b);
    }

    // "p", "p/q" or a decimal; sign handled here
    Rational rational() {
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        std::string ip = digits();
        Rational r;
        if (eat('/')) {
            std::string q = digits();
            if (Int(q) == 0) fail("zero denominator");
            r = make_rational(Int(ip), Int(q));
        } else if (i < s.size() && s[i] == '.') {
            ++i;
            size_t b = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == b) fail("expected digits after decimal point");
            std::string fp = s.substr(b, i - b);
            Int den = pow_int(Int(10), fp.size());
            r = make_rational(Int(ip) * den + Int(fp), den);
        } else {
            r = Rational(Int(ip));
        }
        return negative ? Rational(-r) : r;
    }

    // sqrt(D) with rational D >= 0
    Scalar sqrt_atom() {
        if (!eat('(')) fail("expected ( after sqrt");
        Rational d = rational();
        if (d < 0) fail("negative radicand");
        if (!eat(')')) fail("expected ) after sqrt radicand");
        return Scalar::sqrt_rational(d);
    }

    Scalar root_atom() {
        if (!eat('(')) fail("expected ( after root");
        std::vector<Rational> coeffs; // given high-to-low
        coeffs.push_back(rational());
        while (eat(',')) coeffs.push_back(rational());
        if (!eat(';')) fail("expected ; separating root coefficients from the bracket");
        Rational lo = rational();
        if (!eat(',')) fail("expected , between bracket ends");
        Rational hi = rational();
        if (!eat(')')) fail("expected ) closing root");
        std::vector<Rational> ascending(coeffs.rbegin(), coeffs.rend());
        return Scalar::from_root(ascending, lo, hi);
    }
};

} // namespace

Rational parse_rational(const std::string& text) {
    Cursor c{text};
    Rational r = c.rational();
    if (!c.done()) c.fail("trailing characters after rational");
    return r;
}

Scalar parse_scalar(const std::string& text) {
    Cursor c{text};
    if (c.eat_word("root")) {
        Scalar s = c.root_atom();
        if (!c.done()) c.fail("a root atom cannot be combined with other terms");
        return s;
    }
    SurdSum acc;
    bool first = true;
    while (true) {
        bool negative = false;
        if (c.eat('-'))
            negative = true;
        else if (!c.eat('+') && !first)
            c.fail("expected + or - between terms");
        first = false;
        if (c.peek() == '-') c.fail("sign already given for this term");

        Scalar term;
        if (c.eat_word("sqrt")) {
            term = c.sqrt_atom();
        } else {
            Rational coeff = c.rational();
            if (c.eat('*')) {
                if (!c.eat_word("sqrt")) c.fail("expected sqrt after *");
                term = c.sqrt_atom().mul_rational(coeff);
            } else {
                term = Scalar::from_rational(coeff);
            }
        }
        if (negative) term = term.neg();
        acc = acc.add(term.as_surd());
        if (c.done()) break;
        char n = c.peek();
        if (n != '+' && n != '-') c.fail("expected + or - between terms");
    }
    return Scalar::from_surd(acc);
}

std::string format_scalar(const Scalar& s) {
    switch (s.tier()) {
        case Scalar::Tier::Rational:
            return s.rational().get_str();
        case Scalar::Tier::Quadratic: {
            std::string out;
            for (const auto& [d, coeff] : s.quadratic().terms()) {
                std::string piece;
                if (d == 1) {
                    piece = coeff.get_str();
                } else {
                    Rational c = coeff < 0 ? Rational(-coeff) : coeff;
                    piece = (coeff < 0 ? "-" : "");
                    if (c != 1) piece += c.get_str() + "*";
                    piece += "sqrt(" + std::to_string(d) + ")";
                }
                if (!out.empty() && piece[0] != '-') out += "+";
                out += piece;
            }
            return out.empty() ? "0" : out;
        }
        case Scalar::Tier::Root: {
            const PolyRoot& r = s.root();
            std::string out = "root(";
            for (size_t k = r.coeffs().size(); k-- > 0;) {
                out += r.coeffs()[k].get_str();
                out += k == 0 ? "; " : ", ";
            }
            out += r.lo().get_str() + ", " + r.hi().get_str() + ")";
            return out;
        }
    }
    raise(ErrorKind::Internal, "unreachable scalar tier");
}

PolytopeSpec parse_polytope_spec(const std::string& text) {
    Cursor c{text};
    PolytopeSpec::Kind kind;
    if (c.eat_word("cross"))
        kind = PolytopeSpec::Kind::Cross;
    else if (c.eat_word("simplex"))
        kind = PolytopeSpec::Kind::Simplex;
    else
        c.fail("expected polytope kind 'cross' or 'simplex'");
    if (!c.eat_word("d") || !c.eat('=')) c.fail("expected d=<dim>");
    long d = parse_long(c.digits(), "d");
    if (!c.eat_word("a") || !c.eat('=') || !c.eat('[')) c.fail("expected a=[...]");

    // split the bracket body on top-level commas; scalars may hold commas of
    // their own inside root(...)
    std::vector<Scalar> axes;
    size_t start = c.i;
    int depth = 0;
    for (; c.i < c.s.size(); ++c.i) {
        char ch = c.s[c.i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth < 0) c.fail("unbalanced parentheses");
        if (depth == 0 && (ch == ',' || ch == ']')) {
            axes.push_back(parse_scalar(c.s.substr(start, c.i - start)));
            start = c.i + 1;
            if (ch == ']') break;
        }
    }
    if (c.i >= c.s.size()) c.fail("unterminated axis list");
    ++c.i;
    if (!c.done()) c.fail("trailing characters after axis list");
    if (d != static_cast<long>(axes.size()))
        raise(ErrorKind::Parse, "declared d=" + std::to_string(d) + " but " +
                                    std::to_string(axes.size()) + " axes given");
    return {kind, AxisLengths(axes)};
}

std::string format_polytope_spec(const PolytopeSpec& spec) {
    std::string out = spec.kind == PolytopeSpec::Kind::Cross ? "cross" : "simplex";
    out += " d=" + std::to_string(spec.axes.dim()) + " a=[";
    for (int i = 0; i < spec.axes.dim(); ++i) {
        if (i) out += ", ";
        out += format_scalar(spec.axes.at(i));
    }
    return out + "]";
}

SweepConfig parse_sweep_config(const std::string& text) {
    bool have_polytope = false, have_start = false, have_stop = false, have_count = false;
    std::vector<Scalar> dummy{Scalar::from_int(1)};
    SweepConfig cfg{{PolytopeSpec::Kind::Cross, AxisLengths(dummy)}, Rational(0), Rational(0),
                    0,  false, 0, "", 0, 0};

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            raise(ErrorKind::Parse, "expected key = value, got \"" + line + "\"");
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        if (key == "polytope") {
            cfg.polytope = parse_polytope_spec(val);
            have_polytope = true;
        } else if (key == "t_start") {
            cfg.t_start = parse_rational(val);
            have_start = true;
        } else if (key == "t_stop") {
            cfg.t_stop = parse_rational(val);
            have_stop = true;
        } else if (key == "t_count") {
            cfg.t_count = parse_long(val, "t_count");
            have_count = true;
        } else if (key == "spacing") {
            if (val == "log")
                cfg.log_spacing = true;
            else if (val == "linear")
                cfg.log_spacing = false;
            else
                raise(ErrorKind::Parse, "spacing must be linear or log, got \"" + val + "\"");
        } else if (key == "cesaro_n") {
            cfg.cesaro_n = parse_long(val, "cesaro_n");
        } else if (key == "output") {
            cfg.output = val;
        } else if (key == "precision_bits") {
            cfg.precision_bits = parse_long(val, "precision_bits");
        } else if (key == "seed") {
            {
            long sv = parse_long(val, "seed");
            if (sv < 0) raise(ErrorKind::Parse, "seed must be nonnegative");
            cfg.seed = static_cast<unsigned long>(sv);
        }
        } else {
            raise(ErrorKind::Parse, "unknown config key \"" + key + "\"");
        }
    }
    if (!have_polytope) raise(ErrorKind::Parse, "config is missing polytope");
    if (!have_start || !have_stop || !have_count)
        raise(ErrorKind::Parse, "config is missing the t grid (t_start, t_stop, t_count)");
    if (cfg.t_count < 1) raise(ErrorKind::Parse, "t_count must be at least 1");
    if (cfg.t_stop < cfg.t_start) raise(ErrorKind::Parse, "t_stop must be >= t_start");
    if (cfg.log_spacing && cfg.t_start <= 0)
        raise(ErrorKind::Parse, "log spacing needs t_start > 0");
    if (cfg.cesaro_n < 0 || cfg.cesaro_n == 1)
        raise(ErrorKind::Parse, "cesaro_n must be 0 (off) or at least 2");
    return cfg;
}

std::string format_sweep_config(const SweepConfig& cfg) {
    std::string out;
    out += "polytope = " + format_polytope_spec(cfg.polytope) + "\n";
    out += "t_start = " + cfg.t_start.get_str() + "\n";
    out += "t_stop = " + cfg.t_stop.get_str() + "\n";
    out += "t_count = " + std::to_string(cfg.t_count) + "\n";
    out += std::string("spacing = ") + (cfg.log_spacing ? "log" : "linear") + "\n";
    if (cfg.cesaro_n) out += "cesaro_n = " + std::to_string(cfg.cesaro_n) + "\n";
    if (!cfg.output.empty()) out += "output = " + cfg.output + "\n";
    if (cfg.precision_bits) out += "precision_bits = " + std::to_string(cfg.precision_bits) + "\n";
    if (cfg.seed) out += "seed = " + std::to_string(cfg.seed) + "\n";
    return out;
}

} // namespace latpoly
