#ifndef HVIR_TESTS_HELPERS_HPP
#define HVIR_TESTS_HELPERS_HPP

#include <random>

#include "hvir/parse.hpp"
#include "hvir/verma.hpp"

namespace hvt {

using namespace hvir;

inline GroupPtr zgroup() { return OrderedGroup::integers(); }
inline GroupPtr qreal() { return OrderedGroup::quadratic(2, OrderKind::RealEmbedding); }
inline GroupPtr qlex() { return OrderedGroup::quadratic(2, OrderKind::Lexicographic); }

inline FieldScalar sc(const std::string& text) { return parse_scalar(text); }

inline GroupElement ge(const GroupPtr& g, const std::string& text) {
    return parse_group_element(text, g);
}

inline HighestWeight hw5(const std::string& h, const std::string& hI, const std::string& c,
                         const std::string& cI, const std::string& cLI) {
    return HighestWeight{sc(h), sc(hI), sc(c), sc(cI), sc(cLI)};
}

inline VermaPtr ctx(const GroupPtr& g, const HighestWeight& hw) {
    return VermaModule(g, hw).context();
}

inline ModuleVector mv(const VermaPtr& c, const std::string& text) {
    return parse_module_vector(text, c);
}

/// Random lattice element with coordinates in [-h, h].
inline GroupElement random_element(const GroupPtr& g, std::mt19937& rng, long h) {
    std::uniform_int_distribution<long> coord(-h, h);
    std::vector<mpz_class> cs;
    for (std::size_t k = 0; k < g->rank(); ++k) cs.emplace_back(coord(rng));
    return g->element_from_coords(cs);
}

inline GroupElement random_positive(const GroupPtr& g, std::mt19937& rng, long h) {
    for (;;) {
        GroupElement e = random_element(g, rng, h);
        if (e.is_positive()) return e;
    }
}

inline Generator random_generator(const GroupPtr& g, std::mt19937& rng, long h) {
    std::uniform_int_distribution<int> pick(0, 4);
    switch (pick(rng)) {
        case 0: return Generator::L(random_element(g, rng, h));
        case 1: return Generator::I(random_element(g, rng, h));
        case 2: return Generator::central(GenTag::C);
        case 3: return Generator::central(GenTag::CI);
        default: return Generator::central(GenTag::CLI);
    }
}

inline Monomial random_monomial(const GroupPtr& g, std::mt19937& rng, int max_factors, long h) {
    std::uniform_int_distribution<int> nf(0, max_factors);
    std::uniform_int_distribution<int> tag(0, 1);
    std::vector<GroupElement> ps, js;
    const int n = nf(rng);
    for (int k = 0; k < n; ++k)
        (tag(rng) ? ps : js).push_back(random_positive(g, rng, h));
    return Monomial(ps, js);
}

} // namespace hvt

#endif
