#pragma once

#include "braidss/braid.hpp"
#include "braidss/hall.hpp"
#include "braidss/linalg.hpp"
#include "braidss/spectral.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace braidss {

using Json = nlohmann::json;

namespace detail {

// Integers that fit in 64 bits are written as JSON numbers, larger ones as
// decimal strings.
inline Json integer_to_json(const Integer& z) {
  if (fits_int64(z)) return Json(z.convert_to<std::int64_t>());
  return Json(z.str());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const Json& num, const Json& den) {
  Integer d = integer_from_json(den);
  if (d == 0) throw ParseError("zero denominator");
  return Rational(integer_from_json(num), d);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

// ---- layered forms --------------------------------------------------------

// {"n": n, "layers": {"m": [[num, den, "tree"], ...]}, "y": [[num, den, i], ...]}
inline Json to_json(const LayeredForm& f) {
  Json layers = Json::object();
  for (const auto& [m, e] : f.layers) {
    Json terms = Json::array();
    for (const auto& [t, c] : e.terms)
      terms.push_back(Json::array({detail::integer_to_json(numerator_of(c)), detail::integer_to_json(denominator_of(c)), format_tree(t)}));
    layers[std::to_string(m)] = std::move(terms);
  }
  Json y = Json::array();
  for (const auto& [i, c] : f.y) y.push_back(Json::array({detail::integer_to_json(numerator_of(c)), detail::integer_to_json(denominator_of(c)), i}));
  return Json{{"n", f.n}, {"layers", std::move(layers)}, {"y", std::move(y)}};
}

inline LayeredForm layered_form_from_json(const Json& j) {
  try {
    LayeredForm f;
    f.n = j.at("n").get<int>();
    for (const auto& [key, terms] : j.at("layers").items()) {
      int m = std::stoi(key);
      Alphabet a = Alphabet::layer(m);
      Combination<Rational> c;
      for (const auto& term : terms) c.add(parse_tree(term.at(2).get<std::string>(), a), detail::rational_from_json(term.at(0), term.at(1)));
      f.add_layer(m, LieElement(a, std::move(c)));
    }
    for (const auto& term : j.at("y")) f.add_y(term.at(2).get<int>(), detail::rational_from_json(term.at(0), term.at(1)));
    return f;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed layered form JSON: ") + e.what());
  }
}

// ---- boundary matrices ----------------------------------------------------

// {"d":3,"n":3,"rows":[...],"cols":[...],"entries":[[r,c,num,den],...],"rank":1}
inline Json to_json(const Boundary& b) {
  Json rows = Json::array(), cols = Json::array(), entries = Json::array();
  for (const Tree& t : b.rows) rows.push_back(format_tree(t));
  for (const Tree& t : b.cols) cols.push_back(format_tree(t));
  for (std::size_t c = 0; c < b.matrix.cols(); ++c)
    for (const auto& [r, v] : b.matrix.column(c))
      entries.push_back(Json::array({r, c, detail::integer_to_json(numerator_of(v)), detail::integer_to_json(denominator_of(v))}));
  // Row-major entry order reads more naturally.
  std::sort(entries.begin(), entries.end(), [](const Json& x, const Json& y) {
    return std::pair{x[0].get<std::size_t>(), x[1].get<std::size_t>()} < std::pair{y[0].get<std::size_t>(), y[1].get<std::size_t>()};
  });
  return Json{{"d", b.d}, {"n", b.n}, {"rows", std::move(rows)}, {"cols", std::move(cols)}, {"entries", std::move(entries)}, {"rank", b.rank}};
}

inline Boundary boundary_from_json(const Json& j) {
  try {
    Boundary b;
    b.d = j.at("d").get<int>();
    b.n = j.at("n").get<int>();
    for (const auto& s : j.at("rows")) b.rows.push_back(parse_tree(s.get<std::string>()));
    for (const auto& s : j.at("cols")) b.cols.push_back(parse_tree(s.get<std::string>()));
    b.matrix = RationalMatrix(b.rows.size(), b.cols.size());
    for (const auto& e : j.at("entries")) b.matrix.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), detail::rational_from_json(e.at(2), e.at(3)));
    b.rank = j.contains("rank") ? j.at("rank").get<std::size_t>() : rank(b.matrix);
    return b;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

// Header row of column labels, then one line per row: label, entries.
inline std::string to_csv(const Boundary& b) {
  std::ostringstream out;
  for (const Tree& t : b.cols) out << ',' << detail::csv_field(format_tree(t));
  out << '\n';
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    out << detail::csv_field(format_tree(b.rows[r]));
    for (std::size_t c = 0; c < b.cols.size(); ++c) out << ',' << to_string(b.matrix.at(r, c));
    out << '\n';
  }
  return out.str();
}

inline std::string to_latex(const Boundary& b) {
  std::ostringstream out;
  out << "% d1: M(" << b.d << "," << b.n << ") -> M(" << b.d << "," << b.n + 1 << "), rank " << b.rank << "\n";
  if (b.rows.empty() || b.cols.empty()) {
    out << "% " << b.rows.size() << "x" << b.cols.size() << " matrix\n$()$\n";
    return out.str();
  }
  out << "$\\left(\\begin{smallmatrix}\n";
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    for (std::size_t c = 0; c < b.cols.size(); ++c) {
      if (c) out << " & ";
      Rational v = b.matrix.at(r, c);
      if (denominator_of(v) == 1)
        out << numerator_of(v);
      else
        out << "\\frac{" << numerator_of(v) << "}{" << denominator_of(v) << "}";
    }
    out << (r + 1 < b.rows.size() ? " \\\\\n" : "\n");
  }
  out << "\\end{smallmatrix}\\right)$\n";
  return out.str();
}

// ---- pages ----------------------------------------------------------------

// {"k":3,"page":2,"cells":[{"p":-3,"q":5,"d":2,"n":3,"dim":1},...]}
// An E1 page also carries "matrices", one matrix object per d1.
inline Json to_json(const Page& page) {
  Json cells = Json::array();
  for (const Cell& c : page.cells) cells.push_back(Json{{"p", c.p}, {"q", c.q}, {"d", c.d}, {"n", c.n}, {"dim", c.dim}});
  Json j{{"k", page.k}, {"page", page.page}, {"cells", std::move(cells)}};
  if (page.page == 1) {
    Json mats = Json::array();
    for (const auto& [key, b] : page.boundaries) mats.push_back(to_json(b));
    j["matrices"] = std::move(mats);
  }
  return j;
}

inline Page page_from_json(const Json& j) {
  try {
    Page page;
    page.k = j.at("k").get<int>();
    page.page = j.at("page").get<int>();
    for (const auto& c : j.at("cells")) {
      Cell cell{c.at("p").get<int>(), c.at("q").get<int>(), c.at("d").get<int>(), c.at("n").get<int>(), c.at("dim").get<std::size_t>()};
      page.d_max = std::max(page.d_max, cell.d);
      page.cells.push_back(cell);
    }
    if (j.contains("matrices"))
      for (const auto& m : j.at("matrices")) {
        Boundary b = boundary_from_json(m);
        page.boundaries.emplace(std::pair{b.d, b.n}, std::move(b));
      }
    return page;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed page JSON: ") + e.what());
  }
}

inline std::string to_csv(const Page& page) {
  std::ostringstream out;
  out << "p,q,d,n,dim\n";
  for (const Cell& c : page.cells) out << c.p << ',' << c.q << ',' << c.d << ',' << c.n << ',' << c.dim << '\n';
  return out.str();
}

// A tabular laid out like the printed tables: columns p = -N .. -1 from left
// to right, rows q from the top degree down to k, the q label in the last
// column and the p labels along the bottom.
inline std::string to_latex(const Page& page) {
  int max_n = 1, min_q = page.k, max_q = page.k;
  for (const Cell& c : page.cells) {
    max_n = std::max(max_n, c.n);
    max_q = std::max(max_q, c.q);
    min_q = std::min(min_q, c.q);
  }
  std::ostringstream out;
  out << "\\begin{table}\n\\begin{center}\n\\begin{tabular}{";
  for (int n = 0; n <= max_n; ++n) out << "c|";
  out << "}\n";
  for (int q = max_q; q >= min_q; --q) {
    for (int n = max_n; n >= 1; --n) {
      std::size_t dim = 0;
      for (const Cell& c : page.cells)
        if (c.q == q && c.n == n) dim = c.dim;
      if (dim == 1)
        out << "${\\mathbb Q}$";
      else if (dim > 1)
        out << "${\\mathbb Q}^{" << dim << "}$";
      out << " & ";
    }
    out << q << " \\\\ \\hline\n";
  }
  for (int n = max_n; n >= 1; --n) out << -n << " & ";
  out << " \\\\ \\hline\n\\end{tabular}\n\\vspace{2ex}\n\\caption{$E^" << page.page << "$ term for $k=" << page.k << "$}\n\\end{center}\n\\end{table}\n";
  return out.str();
}

// ---- Hall sets ------------------------------------------------------------

inline Json to_json(const HallSet& h) {
  Json alphabet = Json::array(), trees = Json::array();
  for (const Generator& g : h.alphabet()) alphabet.push_back(g.to_string());
  for (const Tree& t : h.trees()) trees.push_back(format_tree(t));
  return Json{{"alphabet", std::move(alphabet)}, {"max_degree", h.max_degree()}, {"trees", std::move(trees)}};
}

inline HallSet hall_set_from_json(const Json& j) {
  try {
    std::vector<Generator> letters;
    for (const auto& s : j.at("alphabet")) {
      Tree t = parse_tree(s.get<std::string>());
      if (!t.is_leaf()) throw ParseError("alphabet entry " + s.get<std::string>() + " is not a generator");
      letters.push_back(t.generator());
    }
    Alphabet alphabet(std::move(letters));
    std::vector<Tree> trees;
    for (const auto& s : j.at("trees")) trees.push_back(parse_tree(s.get<std::string>(), alphabet));
    return HallSet(std::move(alphabet), j.at("max_degree").get<int>(), std::move(trees));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed Hall set JSON: ") + e.what());
  }
}

inline std::string to_csv(const HallSet& h) {
  std::ostringstream out;
  out << "position,degree,tree\n";
  for (std::size_t k = 0; k < h.size(); ++k) out << k << ',' << h.trees()[k].degree() << ',' << detail::csv_field(format_tree(h.trees()[k])) << '\n';
  return out.str();
}

inline std::string to_latex(const HallSet& h) {
  std::ostringstream out;
  out << "\\begin{align*}\n";
  for (std::size_t k = 0; k < h.size(); ++k) {
    out << (k % 5 == 0 ? "&" : "\\hspace{3ex}\n") << format_tree(h.trees()[k]);
    if (k % 5 == 4 && k + 1 < h.size()) out << " \\\\";
    out << '\n';
  }
  out << "\\end{align*}\n";
  return out.str();
}

}  // namespace braidss
