#pragma once

#include <vector>

#include "planebranch/bipoly.hpp"
#include "planebranch/differentials.hpp"
#include "planebranch/rational.hpp"

namespace planebranch {

// Spectral numbers of a branch with two-generator semigroup <v0,v1>:
// mu = (v0-1)(v1-1) rationals in (-1,1), symmetric about 0.
struct Spectrum {
    long v0 = 0, v1 = 0;
    std::vector<Rat> values;  // sorted ascending

    long mu() const { return (v0 - 1) * (v1 - 1); }
};

// {-delta/(v0 v1), +delta/(v0 v1) : delta a gap of <v0,v1>}. This is the
// primary definition.
Spectrum spectrum(long v0, long v1);

// {(i+1)/v1 + (j+1)/v0 - 1 : 0 <= i < v1-1, 0 <= j < v0-1}. Must equal
// spectrum(v0,v1) as a set; kept as an independent cross-check. (The
// pairing of i with v1 is forced: pairing i with v0 instead fails already
// for (v0,v1) = (2,3), where the gap form gives {-1/6, 1/6}.)
Spectrum spectrum_grid(long v0, long v1);

// min over the support of h of i/v1 + j/v0.
Rat newton_order(const BiPoly& h, long v0, long v1);

struct SpectrumPartition {
    std::vector<Rat> sMinus1;  // sigma < lambda1/(v0 v1); all of S when lambda1 = infinity
    std::vector<Rat> sTilde;   // delta/(v0 v1) for delta in G
    std::vector<Rat> s0;       // delta/(v0 v1) for delta in Lambda \ Gamma
};

SpectrumPartition partition(const Spectrum& sp, const LambdaSet& L);

}  // namespace planebranch
