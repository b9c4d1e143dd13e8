#include "ulrich/picard_lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace ulrich {

DivisorClass::DivisorClass(Integer degree, std::vector<Integer> mults)
    : degree_(std::move(degree)), mults_(std::move(mults)) {
    if (mults_.empty()) throw std::invalid_argument("a divisor class needs n >= 1 points");
}

DivisorClass DivisorClass::zero(std::size_t n) { return uniform(n, 0, 0); }

DivisorClass DivisorClass::uniform(std::size_t n, Integer d, Integer m) {
    return DivisorClass(std::move(d), std::vector<Integer>(n, m));
}

bool DivisorClass::is_zero() const {
    return degree_ == 0 && std::all_of(mults_.begin(), mults_.end(), [](const Integer& v) { return v == 0; });
}

DivisorClass DivisorClass::operator-() const {
    std::vector<Integer> out(mults_.size());
    std::transform(mults_.begin(), mults_.end(), out.begin(), std::negate<>());
    return DivisorClass(-degree_, std::move(out));
}

static void require_same_n(const DivisorClass& a, const DivisorClass& b) {
    if (a.n() != b.n()) {
        throw DimensionError("classes live on different surfaces: n=" + std::to_string(a.n()) +
                             " vs n=" + std::to_string(b.n()));
    }
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same_n(a, b);
    std::vector<Integer> out(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) out[i] = a.mults_[i] + b.mults_[i];
    return DivisorClass(a.degree_ + b.degree_, std::move(out));
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-b); }

DivisorClass operator*(const Integer& k, const DivisorClass& a) {
    std::vector<Integer> out(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) out[i] = k * a.mults_[i];
    return DivisorClass(k * a.degree_, std::move(out));
}

bool operator<(const DivisorClass& a, const DivisorClass& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return std::lexicographical_compare(a.mults_.begin(), a.mults_.end(), b.mults_.begin(), b.mults_.end());
}

DivisorClass canonical_form(const DivisorClass& c) {
    std::vector<Integer> m(c.mults().begin(), c.mults().end());
    std::sort(m.begin(), m.end(), std::greater<>());
    return DivisorClass(c.degree(), std::move(m));
}

bool same_up_to_permutation(const DivisorClass& a, const DivisorClass& b) {
    return a.n() == b.n() && canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class ClassParser {
public:
    explicit ClassParser(std::string_view text) : text_(text) {}

    DivisorClass parse() {
        skip_ws();
        expect('(');
        Integer d = integer("degree");
        skip_ws();
        expect(';');
        std::vector<Integer> mults;
        for (;;) {
            term(mults);
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        expect(')');
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return DivisorClass(std::move(d), std::move(mults));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::string token = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("<end>");
        throw ParseError("cannot parse class \"" + std::string(text_) + "\": " + what + " at offset " +
                         std::to_string(pos_) + " (token '" + token + "')");
    }

    void expect(char ch) {
        skip_ws();
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    Integer integer(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        std::size_t digits = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail(std::string("expected ") + what);
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void term(std::vector<Integer>& out) {
        skip_ws();
        Integer value;
        if (peek() == '(') {
            ++pos_;
            value = integer("multiplicity");
            expect(')');
        } else {
            value = integer("multiplicity");
        }
        skip_ws();
        Integer count = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool braced = peek() == '{';
            if (braced) ++pos_;
            std::size_t at = pos_;
            if (peek() == '-' || peek() == '+') fail("exponent must be a natural number");
            count = integer("exponent");
            if (count == 0) {
                pos_ = at;
                fail("exponent 0 is not allowed");
            }
            if (braced) expect('}');
        }
        if (count > 1'000'000) fail("exponent too large");
        for (Integer i = 0; i < count; ++i) out.push_back(value);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

DivisorClass parse_class(std::string_view text) { return ClassParser(text).parse(); }

std::string to_string(const DivisorClass& c) {
    std::ostringstream os;
    os << '(' << c.degree() << ';';
    auto m = c.mults();
    bool first = true;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!first) os << ',';
        first = false;
        os << m[i];
        if (j - i >= 10) os << "^{" << (j - i) << '}';
        else if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    os << ')';
    return os.str();
}

std::string canonical_text(const DivisorClass& c) { return to_string(canonical_form(c)); }

// ---------------------------------------------------------------------------
// Intersection theory

Integer intersect(const DivisorClass& a, const DivisorClass& b) {
    require_same_n(a, b);
    Integer s = a.degree() * b.degree();
    for (std::size_t i = 0; i < a.n(); ++i) s -= a.mult(i) * b.mult(i);
    return s;
}

DivisorClass canonical_class(std::size_t n) {
    if (n == 0) throw std::invalid_argument("canonical_class: n must be >= 1");
    return DivisorClass::uniform(n, -3, -1);
}

Integer chi(const DivisorClass& c) {
    Integer s = c.degree() * (c.degree() + 3);
    for (const auto& m : c.mults()) s -= m * (m + 1);
    return s / 2 + 1;
}

Integer vdim(const DivisorClass& c) { return chi(c) - 1; }

Integer arithmetic_genus(const DivisorClass& c) {
    const auto k = canonical_class(c.n());
    return (intersect(c, c) + intersect(c, k)) / 2 + 1;
}

DivisorClass serre_dual(const DivisorClass& c) { return canonical_class(c.n()) - c; }

// ---------------------------------------------------------------------------
// Polarizations

std::string to_string(AmplenessCriterion c) {
    switch (c) {
        case AmplenessCriterion::proved_bound: return "proved_bound";
        case AmplenessCriterion::small_n_table: return "small_n_table";
        case AmplenessCriterion::conjectural_flag: return "conjectural_flag";
    }
    return "?";
}

Polarization polarization(std::size_t n, const Integer& m, bool allow_conjectural) {
    if (n == 0) throw std::invalid_argument("polarization: n must be >= 1");
    Polarization p{DivisorClass::uniform(n, m, 1), m};
    const Integer nn = n;
    if (n <= 2) {
        // minimal (very) ample m is 2 for one point and 3 for two points
        const Integer threshold = n == 1 ? 2 : 3;
        p.ample = m >= threshold;
        p.very_ample = p.ample;
        p.criterion_used = AmplenessCriterion::small_n_table;
        return p;
    }
    p.ample = m * m - nn > 0;
    // m >= 2 sqrt(n+4) - 3  <=>  m + 3 >= 2 sqrt(n+4)
    p.very_ample = ge_scaled_sqrt(m + 3, 2, nn + 4);
    p.criterion_used = AmplenessCriterion::proved_bound;
    // plane quartics through up to ten general points stay very ample
    if (!p.very_ample && m == 4 && n <= 10) {
        p.very_ample = true;
        p.criterion_used = AmplenessCriterion::small_n_table;
    }
    if (!p.very_ample && allow_conjectural && p.ample && m * (m + 3) - 2 * nn >= 10) {
        p.very_ample = true;
        p.criterion_used = AmplenessCriterion::conjectural_flag;
    }
    return p;
}

Integer minimal_very_ample_m(std::size_t n) {
    if (n == 0) throw std::invalid_argument("minimal_very_ample_m: n must be >= 1");
    Integer m = 1;
    while (!polarization(n, m).very_ample) ++m;
    return m;
}

Integer sections_of_polarization(const Polarization& pol) {
    return (pol.m + 1) * (pol.m + 2) / 2 - Integer(pol.n());
}

}  // namespace ulrich
