#pragma once
// JSON + CSV serialization: generator matrices, code files, model tables,
// tradeoff datasets, design reports.
//
// BitMatrix rows serialize as hex strings with the most significant digit
// covering columns 0..3 (column 0 is the MSB of the string), zero-padded at
// the low end to a whole number of digits.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "urllc/code.hpp"
#include "urllc/gf2.hpp"
#include "urllc/optimize.hpp"
#include "urllc/tradeoff.hpp"

namespace urllc {

std::string row_to_hex(const BitMatrix& m, std::size_t row);
void row_from_hex(BitMatrix& m, std::size_t row, const std::string& hex);

std::string bitmatrix_to_json(const BitMatrix& m);     // {"rows","cols","row_hex"}
BitMatrix bitmatrix_from_json(const std::string& text);

std::string code_to_json(const LinearCode& c);         // {"label","n","k","d_min","G"}
LinearCode code_from_json(const std::string& text);
void save_code(const LinearCode& c, const std::string& path);
LinearCode load_code(const std::string& path);

std::string model_table_to_json(const ModelTable& t);
ModelTable model_table_from_json(const std::string& text);
void save_model_table(const ModelTable& t, const std::string& path);
ModelTable load_model_table(const std::string& path);

// header: n,k,s,delta_rho_db,log2_K,source
void write_tradeoff_csv(std::ostream& os, const std::vector<TradeoffPoint>& pts);
std::vector<TradeoffPoint> read_tradeoff_csv(std::istream& is);

// header: snr_db,C,V,R
void write_bounds_csv(std::ostream& os, const std::vector<std::array<double, 4>>& rows);

std::string design_point_to_json(const DesignPoint& p, const std::string& problem);
void write_design_curve_csv(std::ostream& os, const std::vector<DesignPoint>& curve);

}  // namespace urllc
