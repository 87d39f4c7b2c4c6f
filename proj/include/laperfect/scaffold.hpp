#pragma once

#include <cstddef>
#include <vector>

#include "laperfect/code_set.hpp"
#include "laperfect/gf2.hpp"
#include "laperfect/word.hpp"

namespace laperfect {

// The scaffold sets of a length n = 2^m space. Levels t are 1..m-1 unless
// stated otherwise. Closed-form predicates work for any n <= 64; the
// definitional (brute-force) constructions scan F^n and are meant for n <= 16.

/// |V^t| = 2^{2^{m-t}-1}.
std::size_t v_size(unsigned n, unsigned t);

/// The index-th element of V^t in ascending order of the even word v.
Word v_element(unsigned n, unsigned t, std::size_t index);

/// V^t = {(v, v, 0, ..., 0) : v even of length 2^{m-t}}, ascending in v.
std::vector<Word> v_set(unsigned n, unsigned t);

bool v_member(const Word& w, unsigned t);

/// Basis of span(V^1 u ... u V^t) = A^t.
Gf2Basis a_basis(unsigned n, unsigned t);

bool a_member(const Word& w, unsigned t);

/// A^t built by the recursion A^t = V^t + A^{t-1}.
CodeSet a_enumerate(unsigned n, unsigned t);

/// The extended Hamming code H = A^{m-1}.
CodeSet hamming_code(unsigned n);

/// Definitional closure: even words whose whole neighborhood lies in Omega(S).
CodeSet theta(const CodeSet& set);

/// Closed form of Theta(A^t): p^t(w) = 0 for t < m-1, F_Ev for t = m-1.
bool theta_a_member(const Word& w, unsigned t);

/// Closed form of Omega(A^t): wt(p^t(w)) = 1.
bool omega_a_member(const Word& w, unsigned t);

/// B^t membership: V^1 for t = 1, otherwise p^t(w) = 0 and the even rows sum to 0.
bool b_member(const Word& w, unsigned t);

/// dim B^t = 2^{m-t}(2^t - 1) - 1.
unsigned b_dimension(unsigned n, unsigned t);

/// B^t by scanning F^n with the closed form.
CodeSet b_enumerate(unsigned n, unsigned t);

/// B^t from its definition V^t + Theta(A^{t-1}) with Theta computed by brute force.
CodeSet b_definitional(unsigned n, unsigned t);

/// Sumset {a + b}.
CodeSet sumset(const CodeSet& a, const CodeSet& b);

// Raw-encoding versions used in hot loops.
bool theta_a_member_bits(Bits w, unsigned n, unsigned t);
bool omega_a_member_bits(Bits w, unsigned n, unsigned t);
bool b_member_bits(Bits w, unsigned n, unsigned t);

}  // namespace laperfect
