#pragma once

#include <string>

#include "hearts/quiver/representation.hpp"

namespace hearts::quiver {

enum class StandardKind { Projective, Injective, Simple };

// P(v) is spanned by the basis paths starting at v, I(v) is the dual of the
// paths ending at v, S(v) is one dimensional at v.
Representation standard_module(const AlgebraPtr& alg, StandardKind kind, std::size_t v);
Representation projective(const AlgebraPtr& alg, std::size_t v);
Representation injective(const AlgebraPtr& alg, std::size_t v);
Representation simple(const AlgebraPtr& alg, std::size_t v);

// Top of P(v) as a map P(v) -> S(v), socle of I(v) as S(v) -> I(v).
Morphism projective_top(const AlgebraPtr& alg, std::size_t v);
Morphism injective_socle(const AlgebraPtr& alg, std::size_t v);

}  // namespace hearts::quiver
