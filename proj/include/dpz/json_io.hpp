// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "dpz/bps.hpp"
#include "dpz/hilbert.hpp"
#include "dpz/lattice.hpp"
#include "dpz/picard.hpp"
#include "dpz/positivity.hpp"

namespace dpz::json_io {

using nlohmann::json;

/// Integers as numbers, other rationals as "p/q".
json rational(const Rational& r);

json divisor(const DelPezzoSurface& s, const DivisorClass& d);
json surface_info(const DelPezzoSurface& s);
json codim(const DelPezzoSurface& s, const CodimReport& r, bool with_witness);
json condition(const ConditionReport& r);
json very_ample(const DelPezzoSurface& s, const VeryAmpleResult& r);
json betti_table(const BettiTable& t);
json moduli_betti(const ModuliBetti& m);
json gap(const GapReport& g);
json test_matrix(const DelPezzoSurface& s, const TestMatrixReport& r);
json picard_bound(const PicardBound& b);
json bps_table(const BpsTable& t);
json taut_generators(const std::vector<TautGenerator>& gens);

}  // namespace dpz::json_io
