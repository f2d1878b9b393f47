#include "ginlab/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ginlab {

namespace {

class PolyParser {
public:
    PolyParser(const RingCtx& ctx, const std::string& text, TermOrder order)
        : ctx_(ctx), text_(text), order_(order) {}

    Polynomial run() {
        Polynomial p = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw error(errc::input, "parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial parse_sum() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial acc = parse_term();
        if (neg) acc = poly_neg(ctx_, acc);
        for (;;) {
            if (eat('+')) acc = poly_add(ctx_, acc, parse_term());
            else if (eat('-')) acc = poly_sub(ctx_, acc, parse_term());
            else return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (eat('*')) acc = poly_mul(ctx_, acc, parse_factor());
        return acc;
    }

    Polynomial parse_factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return maybe_power(std::move(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return maybe_power(parse_variable());
        fail("expected a coefficient, variable, or '('");
    }

    Polynomial maybe_power(Polynomial base) {
        if (!eat('^')) return base;
        long k = parse_int();
        if (k < 0) fail("negative power");
        return poly_pow(ctx_, base, static_cast<int>(k));
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        const std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 6) fail("exponent too large");
        return std::stol(digits);
    }

    Polynomial parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        mpz_class num(text_.substr(start, pos_ - start));
        Scalar c = ctx_.field.from_mpz(num);
        if (eat('/')) {
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) fail("expected a denominator");
            mpz_class den(text_.substr(dstart, pos_ - dstart));
            if (den == 0) fail("fraction with zero denominator");
            c = ctx_.field.fraction(num, den);
        }
        return poly_monomial(ctx_, order_, Monomial::one(ctx_.n), c);
    }

    Polynomial parse_variable() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        int idx = ctx_.var_index(name);
        if (idx < 0) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return poly_variable(ctx_, order_, idx);
    }

    const RingCtx& ctx_;
    const std::string& text_;
    TermOrder order_;
    std::size_t pos_ = 0;
};

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

FieldSpec parse_field_name(const std::string& name, int line_no) {
    if (name == "Q" || name == "QQ") return FieldSpec::rationals();
    if (name.rfind("Fp:", 0) == 0) {
        try {
            return FieldSpec::prime(std::stol(name.substr(3)));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw error(errc::input, "line " + std::to_string(line_no) + ": bad field '" + name +
                                 "' (expected Q or Fp:<prime>)");
}

} // namespace

Polynomial parse_poly(const RingCtx& ctx, const std::string& text, TermOrder order) {
    return PolyParser(ctx, text, order).run();
}

IdealFile parse_ideal_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_ring = false, in_gens = false;
    int n = 0;
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> names;
    TermOrder order = TermOrder::degrevlex;
    std::vector<std::string> gen_texts;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        if (!in_gens && line.rfind("ring:", 0) == 0) {
            std::istringstream fields(line.substr(5));
            std::string kv;
            while (fields >> kv) {
                if (kv.rfind("n=", 0) == 0) {
                    n = std::stoi(kv.substr(2));
                } else if (kv.rfind("field=", 0) == 0) {
                    field = parse_field_name(kv.substr(6), line_no);
                } else {
                    throw error(errc::input,
                                "line " + std::to_string(line_no) + ": unknown ring attribute '" + kv + "'");
                }
            }
            require(n >= 1, errc::input, "line " + std::to_string(line_no) + ": ring needs n=<int>");
            have_ring = true;
        } else if (!in_gens && line.rfind("vars:", 0) == 0) {
            std::istringstream vs(line.substr(5));
            std::string v;
            while (vs >> v) names.push_back(v);
        } else if (!in_gens && line.rfind("order:", 0) == 0) {
            order = order_from_name(strip(line.substr(6)));
        } else if (!in_gens && line == "gens:") {
            in_gens = true;
        } else if (in_gens) {
            gen_texts.push_back(line);
        } else {
            throw error(errc::input, "line " + std::to_string(line_no) + ": unexpected '" + line + "'");
        }
    }
    require(have_ring, errc::input, "missing 'ring:' header");

    IdealFile file;
    file.ring = RingCtx::make(n, field, std::move(names));
    file.order = order;
    for (std::size_t i = 0; i < gen_texts.size(); ++i) {
        try {
            file.gens.push_back(parse_poly(file.ring, gen_texts[i], order));
        } catch (const error& e) {
            throw error(errc::input, "generator " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    file.gen_texts = std::move(gen_texts);
    return file;
}

IdealFile parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::input, "cannot open ideal file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal_text(buf.str());
}

} // namespace ginlab
