#pragma once

#include <json.hpp>

#include "nakayama/census.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/indec.hpp"
#include "nakayama/sequences.hpp"

// JSON views of engine results. Key order is fixed so output is byte-stable.
namespace nakayama::json {

using Json = nlohmann::ordered_json;

/// [{"a": 1, "b": 1}, ...]
Json modules(const IndexedModuleSet& set);
/// [[a_0, b_0], ..., [a_m, b_m]]
Json resolution(const ProjectiveResolution& res);
/// {"dim": d, "degree": 0 | null}
Json hom(int dim);
/// {"dim": 0 | 1, "degree": i | null}
Json ext(const ExtProfile& profile);
Json report(const CensusReport& report);
/// {"kind": ..., "n_max": ..., "cells": [{"n", "m", "value"}, ...]}
Json table(const TableGrid& grid);

}  // namespace nakayama::json
