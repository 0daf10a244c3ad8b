#pragma once
// Seeded generator of projective toric morphisms for property sweeps.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "toricmori/fan.hpp"
#include "toricmori/divisor.hpp"

namespace toricmori {

enum class CorpusKind { complete, fibration, birational };
const char* corpus_kind_name(CorpusKind k);

struct CorpusEntry {
    std::string name;
    CorpusKind kind = CorpusKind::complete;
    FanMap map;        // simplicial source, projective over the target
    Divisor divisor;   // random Q-divisor on the source
};

struct CorpusOptions {
    std::size_t max_rank = 3;
    std::size_t max_rays = 10;
    bool affine_only = false;  // only entries over a single-cone base
};

/// Deterministic in (seed, count, options). Every entry is checked to be a
/// fan and a projective morphism.
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusOptions& opt = {});

/// Coefficients p/q with 1 <= q <= 6 and |p/q| <= 5.
Divisor random_divisor(std::mt19937_64& rng, std::size_t n);

}  // namespace toricmori
