#pragma once

// Parameterized graph families and their canonical labelled constructions.
//
// Labelling conventions:
//   Path(k)        1 - 2 - ... - k
//   Star(n)        centre n, leaves 1..n-1
//   Spider(a,b)    centre ab+1; leg r occupies (r-1)a+1 (tip) .. ra (next to centre)
//   Lollipop(l,n)  Path(n) plus the chord {n-l+1, n}
//   Broom(k,p)     Path(k) 1-summed at k with the centre of Spider(1,p);
//                  pendants are k+1..k+p

#include <charconv>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "kemeny/graph.hpp"

namespace kemeny {

struct FamilySpec;

namespace family {

struct Path {
  int k;
};
struct Star {
  int n;
};
struct Spider {
  int a;
  int b;
};
struct Lollipop {
  int l;
  int n;
};
struct Broom {
  int k;
  int p;
};
/// Path(k) plus the chord {i,j}.
struct PathChord {
  int k;
  int i;
  int j;
};
/// Broom(k,p) plus the edge from pendant k+1 to path vertex k+2-l, closing an l-cycle.
struct BroomPendantChord {
  int k;
  int p;
  int l;
};
/// Broom(k,p) plus a chord {i,j} on its path part.
struct BroomPathChord {
  int k;
  int p;
  int i;
  int j;
};
struct OneSum {
  std::shared_ptr<const FamilySpec> first;
  Vertex v1;
  std::shared_ptr<const FamilySpec> second;
  Vertex v2;
};

}  // namespace family

struct FamilySpec {
  using Variant = std::variant<family::Path, family::Star, family::Spider, family::Lollipop, family::Broom,
                               family::PathChord, family::BroomPendantChord, family::BroomPathChord, family::OneSum>;
  Variant value;

  template <class T>
  FamilySpec(T t) : value(std::move(t)) {}  // NOLINT(google-explicit-constructor)
};

inline FamilySpec one_sum_spec(FamilySpec first, Vertex v1, FamilySpec second, Vertex v2) {
  return family::OneSum{std::make_shared<const FamilySpec>(std::move(first)), v1,
                        std::make_shared<const FamilySpec>(std::move(second)), v2};
}

namespace detail {

inline Graph path_graph(int k) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < k; ++v) edges.emplace_back(v, v + 1);
  return Graph(k, std::move(edges));
}

inline Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, n);
  return Graph(n, std::move(edges));
}

inline Graph spider_graph(int a, int b) {
  const Vertex centre = a * b + 1;
  std::vector<Edge> edges;
  for (int r = 1; r <= b; ++r) {
    const Vertex tip = (r - 1) * a + 1;
    const Vertex inner = r * a;
    for (Vertex v = tip; v < inner; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(inner, centre);
  }
  return Graph(centre, std::move(edges));
}

inline Graph broom_graph(int k, int p) {
  const Graph star = spider_graph(1, p);
  if (k == 1) return star;
  return one_sum(path_graph(k), k, star, p + 1);
}

}  // namespace detail

/// Throws DomainError unless the parameters lie in the family's domain.
inline void validate(const FamilySpec& spec) {
  using detail::require;
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Path>) {
          require(f.k >= 2, "Path(k) needs k >= 2");
        } else if constexpr (std::is_same_v<T, family::Star>) {
          require(f.n >= 3, "Star(n) needs n >= 3");
        } else if constexpr (std::is_same_v<T, family::Spider>) {
          require(f.a >= 1 && f.b >= 2, "Spider(a,b) needs a >= 1, b >= 2");
        } else if constexpr (std::is_same_v<T, family::Lollipop>) {
          require(f.l >= 3 && f.l <= f.n, "Lollipop(l,n) needs 3 <= l <= n");
        } else if constexpr (std::is_same_v<T, family::Broom>) {
          require(f.k >= 1 && f.p >= 2, "Broom(k,p) needs k >= 1, p >= 2");
        } else if constexpr (std::is_same_v<T, family::PathChord>) {
          require(f.k >= 3 && f.i >= 1 && f.i < f.j && f.j <= f.k && f.j - f.i >= 2,
                  "PathChord(k,i,j) needs 1 <= i < j <= k, j-i >= 2");
        } else if constexpr (std::is_same_v<T, family::BroomPendantChord>) {
          require(f.k >= 2 && f.p >= 2 && f.l >= 3 && f.l <= f.k + 1,
                  "BroomPendantChord(k,p,l) needs k >= 2, p >= 2, 3 <= l <= k+1");
        } else if constexpr (std::is_same_v<T, family::BroomPathChord>) {
          require(f.k >= 3 && f.p >= 2 && f.i >= 1 && f.i < f.j && f.j <= f.k && f.j - f.i >= 2,
                  "BroomPathChord(k,p,i,j) needs p >= 2, 1 <= i < j <= k, j-i >= 2");
        } else {
          require(f.first && f.second, "OneSum needs two operands");
          validate(*f.first);
          validate(*f.second);
        }
      },
      spec.value);
}

inline Graph build(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& f) -> Graph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Path>) {
          return detail::path_graph(f.k);
        } else if constexpr (std::is_same_v<T, family::Star>) {
          return detail::star_graph(f.n);
        } else if constexpr (std::is_same_v<T, family::Spider>) {
          return detail::spider_graph(f.a, f.b);
        } else if constexpr (std::is_same_v<T, family::Lollipop>) {
          return add_edge(detail::path_graph(f.n), f.n - f.l + 1, f.n);
        } else if constexpr (std::is_same_v<T, family::Broom>) {
          return detail::broom_graph(f.k, f.p);
        } else if constexpr (std::is_same_v<T, family::PathChord>) {
          return add_edge(detail::path_graph(f.k), f.i, f.j);
        } else if constexpr (std::is_same_v<T, family::BroomPendantChord>) {
          return add_edge(detail::broom_graph(f.k, f.p), f.k + 1, f.k + 2 - f.l);
        } else if constexpr (std::is_same_v<T, family::BroomPathChord>) {
          return add_edge(detail::broom_graph(f.k, f.p), f.i, f.j);
        } else {
          return one_sum(build(*f.first), f.v1, build(*f.second), f.v2);
        }
      },
      spec.value);
}

inline std::string to_string(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        auto s = [](int x) { return std::to_string(x); };
        if constexpr (std::is_same_v<T, family::Path>) {
          return "path:" + s(f.k);
        } else if constexpr (std::is_same_v<T, family::Star>) {
          return "star:" + s(f.n);
        } else if constexpr (std::is_same_v<T, family::Spider>) {
          return "spider:" + s(f.a) + "," + s(f.b);
        } else if constexpr (std::is_same_v<T, family::Lollipop>) {
          return "lollipop:" + s(f.l) + "," + s(f.n);
        } else if constexpr (std::is_same_v<T, family::Broom>) {
          return "broom:" + s(f.k) + "," + s(f.p);
        } else if constexpr (std::is_same_v<T, family::PathChord>) {
          return "pathchord:" + s(f.k) + "," + s(f.i) + "," + s(f.j);
        } else if constexpr (std::is_same_v<T, family::BroomPendantChord>) {
          return "broompendant:" + s(f.k) + "," + s(f.p) + "," + s(f.l);
        } else if constexpr (std::is_same_v<T, family::BroomPathChord>) {
          return "broompath:" + s(f.k) + "," + s(f.p) + "," + s(f.i) + "," + s(f.j);
        } else {
          return "onesum(" + to_string(*f.first) + "@" + s(f.v1) + ";" + to_string(*f.second) + "@" + s(f.v2) + ")";
        }
      },
      spec.value);
}

/// Parses the flat "name:p1,p2,..." grammar used on the command line.
inline FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec must look like name:params");
  const std::string_view name = text.substr(0, colon);
  std::vector<int> params;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad integer \"" + std::string(tok) + "\" in family spec");
    }
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  auto arity = [&](std::size_t n) {
    if (params.size() != n) {
      throw ParseError(std::string(name) + " takes " + std::to_string(n) + " parameter(s)");
    }
  };
  FamilySpec spec = family::Path{0};
  if (name == "path") {
    arity(1);
    spec = family::Path{params[0]};
  } else if (name == "star") {
    arity(1);
    spec = family::Star{params[0]};
  } else if (name == "spider") {
    arity(2);
    spec = family::Spider{params[0], params[1]};
  } else if (name == "lollipop") {
    arity(2);
    spec = family::Lollipop{params[0], params[1]};
  } else if (name == "broom") {
    arity(2);
    spec = family::Broom{params[0], params[1]};
  } else if (name == "pathchord") {
    arity(3);
    spec = family::PathChord{params[0], params[1], params[2]};
  } else if (name == "broompendant") {
    arity(3);
    spec = family::BroomPendantChord{params[0], params[1], params[2]};
  } else if (name == "broompath") {
    arity(4);
    spec = family::BroomPathChord{params[0], params[1], params[2], params[3]};
  } else {
    throw ParseError("unknown family \"" + std::string(name) + "\"");
  }
  validate(spec);
  return spec;
}

}  // namespace kemeny
