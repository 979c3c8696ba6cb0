#pragma once

#include <vector>

#include "itab/order_ideal.hpp"
#include "itab/tableau.hpp"

namespace itab {

// One step of K-promotion: delete the entries equal to 1, slide the holes
// toward the lower right (each hole repeatedly absorbs the minimum of its
// south/east neighbors, erasing that value from the neighbors that held it),
// fill the holes that reach the border with bound+1, then decrement every
// entry.  Total on valid tableaux; when 1 does not occur the slide phase is
// empty and the step is a uniform decrement.
IncreasingTableau k_promote(const IncreasingTableau& T);

// steps >= 0 applications of k_promote.
IncreasingTableau k_promote_power(const IncreasingTableau& T, long long steps);

// K-theoretic Bender-Knuth involution on values {i, i+1}: within each
// orthogonally connected component of cells holding i or i+1, a component
// whose cells all hold the same value has that value switched; mixed
// components are left alone.  Requires 1 <= i < bound.
IncreasingTableau k_bk_toggle(const IncreasingTableau& T, int i);

// K-promotion expressed as the toggle product: apply k_bk_toggle for
// i = 1, 2, ..., bound-1 in that order.  Agrees with k_promote.
IncreasingTableau k_promote_toggles(const IncreasingTableau& T);

// K-evacuation: descending-length toggle sweeps.  For L = bound-1 down to 1,
// apply k_bk_toggle for i = 1..L.  An involution that conjugates k_promote
// to its inverse.
IncreasingTableau k_evacuate(const IncreasingTableau& T);

// The minimal element of the a x b family with bound a+b: T(i,j) = i+j-1
// (1-based coordinates).
IncreasingTableau minimal_tableau(int a, int b);

// The K-promotion orbit of minimal_tableau(a, b), starting at the minimal
// tableau and listing successive promotions until it closes up.
std::vector<IncreasingTableau> minimal_tableau_orbit(int a, int b);

// Bijection between rectangular tableaux with extreme bound and order
// ideals: requires an a x b rectangle with bound exactly a+b, where every
// entry is i+j-1 or i+j.  The cells with T(i,j) = i+j form an order filter;
// its 180-degree rotation is the returned ideal of [a] x [b].  Intertwines
// k_promote with rowmotion.
OrderIdeal tableau_to_ideal(const IncreasingTableau& T);

// Inverse of tableau_to_ideal.
IncreasingTableau ideal_to_tableau(const OrderIdeal& J);

}  // namespace itab
