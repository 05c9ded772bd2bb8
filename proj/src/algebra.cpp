#include "qannulus/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>


namespace qannulus {

CoeffFunction::CoeffFunction(long core_min, std::vector<cplx> values, cplx left_const,
                             cplx right_const)
    : v_(core_min, std::move(values), Poly::constant(left_const), Poly::constant(right_const)) {}

CoeffFunction::CoeffFunction(const TailVector& v) : v_(v) {
    if (v.tail_degree() > 0)
        throw std::invalid_argument("coefficient functions must be eventually constant");
}

CoeffFunction CoeffFunction::spike(long site, cplx value) { return CoeffFunction(site, {value}, 0.0, 0.0); }

CoeffFunction CoeffFunction::constant(cplx c) { return CoeffFunction(TailVector::constant(c)); }

bool CoeffFunction::is_zero() const {
    if (!v_.finitely_supported()) return false;
    for (const auto& z : v_.core())
        if (z != cplx{}) return false;
    return true;
}

bool operator==(const CoeffFunction& a, const CoeffFunction& b) {
    if (a.left_const() != b.left_const() || a.right_const() != b.right_const()) return false;
    const long lo = std::min(a.core_min(), b.core_min());
    const long hi = std::max(a.core_max(), b.core_max());
    for (long l = lo; l <= hi; ++l)
        if (a(l) != b(l)) return false;
    return true;
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(Modes modes) : modes_(std::move(modes)) { prune(); }

AlgebraElement AlgebraElement::one() { return term(0, CoeffFunction::constant(1.0)); }

AlgebraElement AlgebraElement::V(long k) { return term(k, CoeffFunction::constant(1.0)); }

AlgebraElement AlgebraElement::term(long n, CoeffFunction a) {
    Modes m;
    m.emplace(n, std::move(a));
    return AlgebraElement(std::move(m));
}

CoeffFunction AlgebraElement::coeff(long n) const {
    const auto it = modes_.find(n);
    return it == modes_.end() ? CoeffFunction{} : it->second;
}

void AlgebraElement::prune() {
    std::erase_if(modes_, [](const auto& kv) { return kv.second.is_zero(); });
    for (auto& [n, c] : modes_) c = CoeffFunction(c.vec().trimmed());
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [n, c] : o.modes_) {
        auto it = modes_.find(n);
        if (it == modes_.end())
            modes_.emplace(n, c);
        else
            it->second = CoeffFunction(it->second.vec() + c.vec());
    }
    prune();
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    AlgebraElement neg = o;
    neg *= -1.0;
    return *this += neg;
}

AlgebraElement& AlgebraElement::operator*=(cplx s) {
    for (auto& [n, c] : modes_) c = CoeffFunction(s * c.vec());
    prune();
    return *this;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement::Modes out;
    for (const auto& [n, a] : x.modes()) {
        for (const auto& [m, b] : y.modes()) {
            const TailVector prod = a.vec().shifted(m) * b.vec();
            auto it = out.find(n + m);
            if (it == out.end())
                out.emplace(n + m, CoeffFunction(prod));
            else
                it->second = CoeffFunction(it->second.vec() + prod);
        }
    }
    return AlgebraElement(std::move(out));
}

AlgebraElement adjoint(const AlgebraElement& x) {
    AlgebraElement::Modes out;
    for (const auto& [n, a] : x.modes()) out.emplace(-n, CoeffFunction(a.vec().conj().shifted(-n)));
    return AlgebraElement(std::move(out));
}

AlgebraElement derivation_delta(const AlgebraElement& x, const BetaFunction& beta) {
    const TailVector b = beta.as_vector();
    AlgebraElement::Modes out;
    for (const auto& [n, a] : x.modes()) {
        const TailVector c = b.shifted(n) * a.vec() - b * a.vec().shifted(1);
        out.emplace(n + 1, CoeffFunction(c));
    }
    return AlgebraElement(std::move(out));
}

AlgebraElement rotate(const AlgebraElement& x, double theta) {
    AlgebraElement::Modes out;
    for (const auto& [n, a] : x.modes()) {
        const cplx phase = std::polar(1.0, static_cast<double>(n) * theta);
        out.emplace(n, n == 0 ? a : CoeffFunction(phase * a.vec()));
    }
    return AlgebraElement(std::move(out));
}

double sup_norm(const AlgebraElement& x) {
    double s = 0.0;
    for (const auto& [n, a] : x.modes()) s = std::max(s, sup_norm(a.vec()));
    return s;
}

double distance(const AlgebraElement& x, const AlgebraElement& y) {
    double d = 0.0;
    for (const auto& [n, a] : x.modes()) d = std::max(d, sup_distance(a.vec(), y.coeff(n).vec()));
    for (const auto& [n, b] : y.modes())
        if (!x.modes().contains(n)) d = std::max(d, sup_norm(b.vec()));
    return d;
}

// ---------------------------------------------------------------------------
// JSON: complex numbers are [re, im].

namespace {

nlohmann::json cplx_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx json_cplx(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

void to_json(nlohmann::json& j, const CoeffFunction& c) {
    auto vals = nlohmann::json::array();
    for (const auto& z : c.values()) vals.push_back(cplx_json(z));
    j = {{"left", cplx_json(c.left_const())},
         {"right", cplx_json(c.right_const())},
         {"core_min", c.core_min()},
         {"values", vals}};
}

void from_json(const nlohmann::json& j, CoeffFunction& c) {
    std::vector<cplx> v;
    for (const auto& z : j.at("values")) v.push_back(json_cplx(z));
    c = CoeffFunction(j.at("core_min").get<long>(), std::move(v), json_cplx(j.at("left")),
                      json_cplx(j.at("right")));
}

void to_json(nlohmann::json& j, const AlgebraElement& x) {
    j = nlohmann::json::object();
    for (const auto& [n, a] : x.modes()) j[std::to_string(n)] = a;
}

void from_json(const nlohmann::json& j, AlgebraElement& x) {
    AlgebraElement::Modes m;
    for (const auto& [key, val] : j.items()) {
        std::size_t pos = 0;
        const long n = std::stol(key, &pos);
        if (pos != key.size()) throw std::invalid_argument("mode key '" + key + "' is not an integer");
        m.emplace(n, val.get<CoeffFunction>());
    }
    x = AlgebraElement(std::move(m));
}

}  // namespace qannulus
