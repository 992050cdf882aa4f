#include "kummer/divisor.hpp"

#include <charconv>

#include "kummer/error.hpp"

namespace kummer {

std::string Place::id() const {
  switch (kind) {
    case Kind::Infinity: return "inf";
    case Kind::RamifiedRoot: return "root:" + std::to_string(root);
    case Kind::Bundle: return "bundle:" + std::to_string(root);
    case Kind::Affine: return "aff:" + std::to_string(x) + ":" + std::to_string(y);
  }
  return "?";
}

namespace {

std::uint64_t parse_uint(const std::string& id, std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::InvalidPlace, "malformed place id '" + id + "'");
  }
  return v;
}

}  // namespace

Place parse_place_id(const std::string& id) {
  std::string_view s = id;
  if (s == "inf") return Place::infinity();
  auto starts = [&](std::string_view pre) { return s.substr(0, pre.size()) == pre; };
  if (starts("root:")) return Place::ramified(static_cast<int>(parse_uint(id, s.substr(5))));
  if (starts("bundle:")) return Place::bundle(static_cast<int>(parse_uint(id, s.substr(7))), 1);
  if (starts("aff:")) {
    const auto rest = s.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::InvalidPlace, "malformed place id '" + id + "'");
    return Place::affine(static_cast<Field::Elem>(parse_uint(id, rest.substr(0, colon))),
                         static_cast<Field::Elem>(parse_uint(id, rest.substr(colon + 1))));
  }
  throw Error(Errc::InvalidPlace, "unknown place id '" + id + "'");
}

Divisor::Divisor(std::initializer_list<std::pair<const Place, int>> init) {
  for (const auto& [p, c] : init) add(p, c);
}

int Divisor::coeff(const Place& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

void Divisor::add(const Place& p, int c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [p, c] : coeffs_) d += static_cast<long>(c) * p.degree;
  return d;
}

std::vector<Place> Divisor::support() const {
  std::vector<Place> out;
  out.reserve(coeffs_.size());
  for (const auto& [p, c] : coeffs_) out.push_back(p);
  return out;
}

bool Divisor::is_effective() const {
  for (const auto& [p, c] : coeffs_) {
    if (c < 0) return false;
  }
  return true;
}

Divisor Divisor::operator-() const {
  Divisor r;
  for (const auto& [p, c] : coeffs_) r.coeffs_.emplace(p, -c);
  return r;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

Divisor operator*(int k, const Divisor& d) {
  Divisor r;
  if (k == 0) return r;
  for (const auto& [p, c] : d.coeffs_) r.coeffs_.emplace(p, k * c);
  return r;
}

std::string Divisor::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const int a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += p.id();
    first = false;
  }
  return s;
}

}  // namespace kummer
