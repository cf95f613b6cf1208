#include "urllc/io_json.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace urllc {

using nlohmann::json;

namespace {

int hex_val(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("row_from_hex: bad hex digit");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

json matrix_json(const BitMatrix& m) {
  json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  json hx = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) hx.push_back(row_to_hex(m, i));
  j["row_hex"] = hx;
  return j;
}

BitMatrix matrix_from(const json& j) {
  BitMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& hx = j.at("row_hex");
  if (hx.size() != m.rows) throw std::invalid_argument("matrix json: row count mismatch");
  for (std::size_t i = 0; i < m.rows; ++i)
    row_from_hex(m, i, hx.at(i).get<std::string>());
  return m;
}

json model_json(const ModelTable& t) {
  json j;
  j["interpolation"] = t.interpolation;
  json es = json::array();
  for (const auto& e : t.entries) {
    json je;
    je["n"] = e.n;
    je["a"] = e.model.a;
    je["b"] = e.model.b;
    je["fit_rmse"] = e.model.fit_rmse;
    es.push_back(je);
  }
  j["entries"] = es;
  return j;
}

}  // namespace

std::string row_to_hex(const BitMatrix& m, std::size_t row) {
  const std::size_t nd = (m.cols + 3) / 4;
  std::string out(nd, '0');
  static const char* digits = "0123456789abcdef";
  for (std::size_t d = 0; d < nd; ++d) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      std::size_t col = 4 * d + b;
      if (col < m.cols && m.get(row, col)) v |= 1 << (3 - b);
    }
    out[d] = digits[v];
  }
  return out;
}

void row_from_hex(BitMatrix& m, std::size_t row, const std::string& hex) {
  const std::size_t nd = (m.cols + 3) / 4;
  if (hex.size() != nd) throw std::invalid_argument("row_from_hex: length mismatch");
  for (std::size_t d = 0; d < nd; ++d) {
    int v = hex_val(hex[d]);
    for (std::size_t b = 0; b < 4; ++b) {
      bool bit = (v >> (3 - b)) & 1;
      std::size_t col = 4 * d + b;
      if (col < m.cols) m.set(row, col, bit);
      else if (bit) throw std::invalid_argument("row_from_hex: nonzero padding");
    }
  }
}

std::string bitmatrix_to_json(const BitMatrix& m) { return matrix_json(m).dump(2); }

BitMatrix bitmatrix_from_json(const std::string& text) {
  return matrix_from(json::parse(text));
}

std::string code_to_json(const LinearCode& c) {
  json j;
  j["label"] = c.label;
  j["n"] = c.n;
  j["k"] = c.k;
  j["d_min"] = c.d_min;
  j["G"] = matrix_json(c.g);
  return j.dump(2);
}

LinearCode code_from_json(const std::string& text) {
  json j = json::parse(text);
  LinearCode c;
  c.label = j.at("label").get<std::string>();
  c.n = j.at("n").get<std::size_t>();
  c.k = j.at("k").get<std::size_t>();
  c.d_min = j.at("d_min").get<std::size_t>();
  c.g = matrix_from(j.at("G"));
  if (c.g.rows != c.k || c.g.cols != c.n)
    throw std::invalid_argument("code json: G shape does not match n, k");
  return c;
}

void save_code(const LinearCode& c, const std::string& path) { spit(path, code_to_json(c)); }
LinearCode load_code(const std::string& path) { return code_from_json(slurp(path)); }

std::string model_table_to_json(const ModelTable& t) { return model_json(t).dump(2); }

ModelTable model_table_from_json(const std::string& text) {
  json j = json::parse(text);
  ModelTable t;
  t.interpolation = j.value("interpolation", "nearest");
  for (const auto& je : j.at("entries")) {
    TradeoffModel m;
    m.a = je.at("a").get<double>();
    m.b = je.at("b").get<double>();
    m.fit_rmse = je.value("fit_rmse", 0.0);
    t.upsert(je.at("n").get<std::size_t>(), m);
  }
  return t;
}

void save_model_table(const ModelTable& t, const std::string& path) {
  spit(path, model_table_to_json(t));
}
ModelTable load_model_table(const std::string& path) {
  return model_table_from_json(slurp(path));
}

void write_tradeoff_csv(std::ostream& os, const std::vector<TradeoffPoint>& pts) {
  os << "n,k,s,delta_rho_db,log2_K,source\n" << std::setprecision(17);
  for (const auto& p : pts)
    os << p.n << ',' << p.k << ',' << p.s << ',' << p.delta_rho_db << ','
       << p.log2_k_ops << ',' << p.source << '\n';
}

std::vector<TradeoffPoint> read_tradeoff_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "n,k,s,delta_rho_db,log2_K,source")
    throw std::invalid_argument("tradeoff csv: bad header");
  std::vector<TradeoffPoint> pts;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string f[6];
    for (int i = 0; i < 6; ++i)
      if (!std::getline(ss, f[i], i < 5 ? ',' : '\n'))
        throw std::invalid_argument("tradeoff csv: short row");
    TradeoffPoint p;
    p.n = std::stoul(f[0]);
    p.k = std::stoul(f[1]);
    p.s = std::stod(f[2]);
    p.delta_rho_db = std::stod(f[3]);
    p.log2_k_ops = std::stod(f[4]);
    p.source = f[5];
    pts.push_back(p);
  }
  return pts;
}

void write_bounds_csv(std::ostream& os, const std::vector<std::array<double, 4>>& rows) {
  os << "snr_db,C,V,R\n" << std::setprecision(17);
  for (const auto& r : rows)
    os << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
}

std::string design_point_to_json(const DesignPoint& p, const std::string& problem) {
  json j;
  j["problem"] = problem;
  j["feasible"] = p.feasible;
  if (!p.feasible) j["infeasible_reason"] = p.infeasible_reason;
  j["n"] = p.n;
  j["k"] = p.k;
  j["rho_r_db"] = p.rho_r_db;
  j["delta_rho_db"] = p.delta_rho_db;
  j["rho_total_db"] = p.rho_total_db;
  j["log2_k_ops"] = p.log2_k_ops;
  j["k_ops"] = p.k_ops;
  j["s_grid"] = p.s_grid;
  j["s_theorem"] = p.s_theorem;
  j["latency"] = p.latency;
  j["e_b"] = p.e_b;
  j["objective"] = p.objective;
  return j.dump(2);
}

void write_design_curve_csv(std::ostream& os, const std::vector<DesignPoint>& curve) {
  os << "n,k,feasible,rho_r_db,delta_rho_db,rho_total_db,log2_k_ops,k_ops,"
        "s_grid,s_theorem,latency,e_b,objective,reason\n"
     << std::setprecision(17);
  for (const auto& p : curve)
    os << p.n << ',' << p.k << ',' << (p.feasible ? 1 : 0) << ',' << p.rho_r_db << ','
       << p.delta_rho_db << ',' << p.rho_total_db << ',' << p.log2_k_ops << ','
       << p.k_ops << ',' << p.s_grid << ',' << p.s_theorem << ',' << p.latency << ','
       << p.e_b << ',' << p.objective << ',' << p.infeasible_reason << '\n';
}

}  // namespace urllc
