#pragma once

// Submodule detection for matrix groups over finite fields: spinning, an
// exact scan for invariant lines and hyperplanes of a (2,3)-pair, and the
// randomized MeatAxe with Norton's irreducibility criterion.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slgen/matrix.hpp"

namespace slgen::meataxe {

using matrix::Mat;
using matrix::Vec;

struct SpinResult {
    /// Linearly independent vectors in the order they were discovered.
    std::vector<Vec> basis;
    std::size_t dimension = 0;
};

/// Smallest subspace containing `seed` and closed under every generator.
/// Breadth-first: basis vectors are processed in order, generators applied
/// in the listed order. Throws ZeroSeed.
SpinResult spin(const Vec& seed, const std::vector<Mat>& gens);

enum class VerdictKind { Irreducible, ReducibleWitness };
/// Natural: the witness spans an invariant subspace of V.
/// Dual: it spans a subspace of V* invariant under the transposed
/// generators; its annihilator is a proper invariant subspace of V.
enum class Side { Natural, Dual };

std::string to_string(VerdictKind k);
std::string to_string(Side s);

struct Witness {
    std::vector<Vec> basis;
    Side side = Side::Natural;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Irreducible;
    std::optional<Witness> witness;
    /// Random algebra elements drawn (MeatAxe only).
    unsigned attempts = 0;
};

/// True iff span(basis) is a proper nonzero subspace invariant under gens
/// (or under their transposes for the dual side).
bool verify_witness(const Witness& w, const std::vector<Mat>& gens);
bool spans_invariant_subspace(const std::vector<Vec>& basis, const std::vector<Mat>& gens);

/// Intersects the lambda-eigenspace of y (lambda^3 = 1) with the
/// nu-eigenspace of x (nu^2 = 1) for every such pair, first on V and then
/// on the dual. Irreducible here means: no invariant line and no invariant
/// hyperplane.
Verdict scan_lines(const Mat& x, const Mat& y);

/// Randomized MeatAxe. An Irreducible verdict is only returned after a
/// passing Norton test; a ReducibleWitness always carries a verified proper
/// invariant subspace. Throws InconclusiveAfterRetries after `budget` draws.
Verdict is_irreducible_module(const std::vector<Mat>& gens, std::mt19937_64& rng, unsigned budget = 64);
Verdict is_irreducible_module(const std::vector<Mat>& gens, std::uint64_t seed, unsigned budget = 64);

}  // namespace slgen::meataxe
