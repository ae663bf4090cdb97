#include "catmat/morphism_label.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <vector>

namespace catmat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join(std::string_view head, std::initializer_list<std::uint64_t> args) {
  std::string out(head);
  out += '(';
  bool first = true;
  for (auto a : args) {
    if (!first) {
      out += ',';
    }
    out += std::to_string(a);
    first = false;
  }
  out += ')';
  return out;
}

/// Splits "Head(a,b,...)" into head and top-level arguments.
std::optional<std::pair<std::string_view, std::vector<std::string_view>>> split_call(
    std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || open == 0 || text.back() != ')') {
    return std::nullopt;
  }
  std::vector<std::string_view> args;
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t p = open + 1; p + 1 < text.size(); ++p) {
    if (text[p] == '(') {
      ++depth;
    } else if (text[p] == ')') {
      if (--depth < 0) {
        return std::nullopt;
      }
    } else if (text[p] == ',' && depth == 0) {
      args.push_back(text.substr(start, p - start));
      start = p + 1;
    }
  }
  if (depth != 0) {
    return std::nullopt;
  }
  args.push_back(text.substr(start, text.size() - 1 - start));
  return std::make_pair(text.substr(0, open), std::move(args));
}

std::optional<std::vector<std::uint64_t>> numbers(const std::vector<std::string_view>& args) {
  std::vector<std::uint64_t> out;
  for (auto a : args) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), v);
    if (ec != std::errc{} || ptr != a.data() + a.size() || a.empty()) {
      return std::nullopt;
    }
    out.push_back(v);
  }
  return out;
}

constexpr std::array<std::string_view, 4> kPartNames = {"CrossBase", "CrossRow", "CrossCol",
                                                       "CrossExtra"};

}  // namespace

std::string_view part_name(label::CrossPart part) {
  return kPartNames[static_cast<std::size_t>(part)];
}

std::string to_string(const MorphismLabel& l) {
  return std::visit(
      overloaded{
          [](const label::Identity& x) { return join("Identity", {x.cls, x.i}); },
          [](const label::Pair& x) { return join("Pair", {x.cls, x.i, x.j, x.u, x.v}); },
          [](const label::Collapsed& x) { return join("Collapsed", {x.cls, x.i, x.j}); },
          [](const label::Cross& x) {
            return join(part_name(x.part), {x.lam, x.i, x.mu, x.j, x.k});
          },
          [](const label::Pad& x) { return join("Pad", {x.cls, x.i, x.j, x.k}); },
          [](const label::Lifted& x) {
            return "Lift(" + std::to_string(x.source) + "," + std::to_string(x.target) + "," +
                   x.inner + ")";
          },
          [](const label::Opaque& x) { return x.name; },
      },
      l);
}

MorphismLabel parse_label(std::string_view text) {
  const auto opaque = label::Opaque{std::string(text)};
  auto call = split_call(text);
  if (!call) {
    return opaque;
  }
  const auto& [head, args] = *call;
  if (head == "Lift" && args.size() == 3) {
    auto ends = numbers({args[0], args[1]});
    if (!ends) {
      return opaque;
    }
    return label::Lifted{(*ends)[0], (*ends)[1], std::string(args[2])};
  }
  auto nums = numbers(args);
  if (!nums) {
    return opaque;
  }
  const auto& v = *nums;
  if (head == "Identity" && v.size() == 2) {
    return label::Identity{v[0], v[1]};
  }
  if (head == "Pair" && v.size() == 5) {
    return label::Pair{v[0], v[1], v[2], v[3], v[4]};
  }
  if (head == "Collapsed" && v.size() == 3) {
    return label::Collapsed{v[0], v[1], v[2]};
  }
  if (head == "Pad" && v.size() == 4) {
    return label::Pad{v[0], v[1], v[2], v[3]};
  }
  for (std::size_t p = 0; p < kPartNames.size(); ++p) {
    if (head == kPartNames[p] && v.size() == 5) {
      return label::Cross{static_cast<label::CrossPart>(p), v[0], v[1], v[2], v[3], v[4]};
    }
  }
  return opaque;
}

}  // namespace catmat
