#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fofana/corpus.hpp"
#include "fofana/lattice.hpp"
#include "fofana/sampling.hpp"
#include "fofana/weights.hpp"

namespace fofana {

// JSON shapes:
//   lattice   {"d": 1, "h": 0.01, "L": 2.0}
//   function  {"kind": "constant", "value": 1.0}
//             {"kind": "indicator-ball", "center": [0, 0], "radius": 1.0}
//             {"kind": "gaussian", "sigma": 1.0}
//             {"kind": "power-tail", "alpha": 2.0, "eps": 0.5}
//             {"kind": "step-random", "seed": 7, "block_cells": 4, "block_len": 0.25?}
//   weight    {"kind": "power", "alpha": 2.0}
//             {"kind": "power-log", "alpha": 2.0, "beta": 1.0}
//             {"kind": "tabulated", "knots": [...], "values": [...]}
//   input     {"lattice": {...}, "function": {...}} or {"lattice": {...}, "values": [...]}
// Readers name the offending field in every diagnostic.

nlohmann::json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const FunctionSpec& spec);
FunctionSpec spec_from_json(const nlohmann::json& j);

nlohmann::json weight_to_json(const WeightFunction& w);
WeightFunction weight_from_json(const nlohmann::json& j, int dim);
WeightFunction weight_from_text(const std::string& text, int dim);

GridFunction grid_function_from_json(const nlohmann::json& j);
nlohmann::json grid_function_to_json(const GridFunction& f);

nlohmann::json corpus_to_json(const Corpus& corpus);

nlohmann::json read_json_file(const std::filesystem::path& path);
// Temp file in the destination directory, then rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace fofana
