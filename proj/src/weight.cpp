#include "wfrob/weight.hpp"

#include <charconv>
#include <stdexcept>

namespace wfrob {

bool Weight::is_zero() const noexcept {
  for (auto c : coords_)
    if (c != 0)
      return false;
  return true;
}

bool Weight::is_dominant() const noexcept {
  for (auto c : coords_)
    if (c < 0)
      return false;
  return true;
}

Weight &Weight::operator+=(const Weight &o) {
  if (o.rank() != rank())
    throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] += o.coords_[i];
  return *this;
}

Weight &Weight::operator-=(const Weight &o) {
  if (o.rank() != rank())
    throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] -= o.coords_[i];
  return *this;
}

Weight &Weight::operator*=(std::int64_t k) {
  for (auto &c : coords_)
    c *= k;
  return *this;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0)
      out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

Weight Weight::parse(std::string_view text) {
  std::vector<std::int64_t> coords;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    while (!field.empty() && field.front() == ' ')
      field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ')
      field.remove_suffix(1);
    if (!field.empty() && field.front() == '+')
      field.remove_prefix(1);
    std::int64_t value = 0;
    auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        end != field.data() + field.size())
      throw std::invalid_argument("not an integer weight coordinate: '" +
                                  std::string(field) + "'");
    coords.push_back(value);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return Weight(std::move(coords));
}

std::size_t WeightHash::operator()(const Weight &w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto c : w.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

} // namespace wfrob
