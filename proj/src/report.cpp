#include "surface_ising/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace surface_ising {

namespace {

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

const char* label_key(Method m) { return m == Method::General ? "q" : "flips"; }

std::string pfaffian_text(const PfaffianRecord& p) {
  if (p.exact) return p.exact->to_string();
  return format_double(p.numeric.real()) + (p.numeric.imag() < 0 ? " - " : " + ") +
         format_double(std::abs(p.numeric.imag())) + "*i";
}

Json record_json(const PartitionResult& r, const PfaffianRecord& p) {
  Json j;
  j["component"] = p.component;
  j[label_key(r.method)] = p.label;
  j["phase"] = p.phase;
  if (p.exact) {
    j["pfaffian"] = p.exact->to_string();
  } else {
    j["pfaffian"] = {{"re", number(p.numeric.real())}, {"im", number(p.numeric.imag())}};
  }
  return j;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Json to_json(const PartitionResult& r, bool with_pfaffians) {
  Json j;
  j["schema"] = 1;
  j["method"] = to_string(r.method);
  j["mode"] = to_string(r.mode);
  if (r.mode == Mode::Exact || r.method == Method::Bruteforce) j["z"] = r.exact.to_string();
  j["numeric"] = number(r.numeric);
  if (r.mode == Mode::Numeric && r.method != Method::Bruteforce) j["residual"] = number(r.residual);
  if (!r.epsilon0.empty()) j["epsilon0"] = r.epsilon0;
  if (with_pfaffians && r.method != Method::Bruteforce) {
    j["pfaffians"] = Json::array();
    for (const auto& p : r.pfaffians) j["pfaffians"].push_back(record_json(r, p));
  }
  return j;
}

std::string render_text(const PartitionResult& r) {
  std::ostringstream out;
  out << "method: " << to_string(r.method) << " (" << to_string(r.mode) << ")\n";
  if (r.mode == Mode::Exact || r.method == Method::Bruteforce) out << "Z_I = " << r.exact.to_string() << "\n";
  if (!std::isnan(r.numeric)) out << "Z_I ~ " << format_double(r.numeric) << "\n";
  if (r.mode == Mode::Numeric && r.method != Method::Bruteforce) out << "residual: " << format_double(r.residual) << "\n";
  if (!r.epsilon0.empty()) {
    out << "epsilon0:";
    for (int e : r.epsilon0) out << ' ' << e;
    out << "\n";
  }
  return out.str();
}

Json pfaffian_table_json(const PartitionResult& r) {
  Json j;
  j["schema"] = 1;
  j["method"] = to_string(r.method);
  j["mode"] = to_string(r.mode);
  j["pfaffians"] = Json::array();
  for (const auto& p : r.pfaffians) j["pfaffians"].push_back(record_json(r, p));
  return j;
}

std::string pfaffian_table_tsv(const PartitionResult& r) {
  std::ostringstream out;
  out << "component\t" << label_key(r.method) << "\tphase\tpfaffian\n";
  for (const auto& p : r.pfaffians) out << p.component << '\t' << p.label << '\t' << p.phase << '\t' << pfaffian_text(p) << '\n';
  return out.str();
}

}  // namespace surface_ising
