#include "twistkit/fp_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twistkit {

// ------------------------------------------------------------ AbelianGroup

AbelianGroup AbelianGroup::from_smith(const SmithForm& snf, std::size_t generators) {
  AbelianGroup a;
  const auto factors = snf.invariant_factors();
  a.free_rank = generators - factors.size();
  for (const auto& d : factors)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

AbelianGroup AbelianGroup::z_plus_zn(long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  AbelianGroup a;
  a.free_rank = 1;
  if (n > 1) a.torsion.push_back(n);
  return a;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    os << (first ? "" : " + ") << "Z_" << d;
    first = false;
  }
  return first ? "0" : os.str();
}

std::string AbelianGroup::to_json() const {
  std::ostringstream os;
  os << "{\"free_rank\":" << free_rank << ",\"torsion\":[";
  for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
  os << "]}";
  return os.str();
}

// --------------------------------------------------------- vanishing cycles

std::vector<ConjugatingTwist> wn_conjugators(int g, long n) {
  if (g < 2) throw std::invalid_argument("W_n needs g >= 2");
  if (n < 1) throw std::invalid_argument("W_n needs n >= 1");
  std::vector<ConjugatingTwist> out{{"", 0}};
  if (g % 2 == 0) {
    const int r = g / 2;
    for (int k = 1; k <= r - 1; ++k) out.push_back({"a" + std::to_string(k), 1});
    out.push_back({"a" + std::to_string(r), n});
    for (int k = r + 2; k <= g; ++k) out.push_back({"b" + std::to_string(k), 1});
  } else {
    const int r = (g - 1) / 2;
    out.push_back({"A3", n});
    for (int j = 5; j <= 2 * r + 1; j += 2) out.push_back({"A" + std::to_string(j), 1});
    for (int k = r + 2; k <= g; ++k) out.push_back({"b" + std::to_string(k), 1});
  }
  return out;
}

std::vector<HClass> vanishing_cycle_classes(int g, Monodromy which) {
  if (g < 2) throw std::invalid_argument("vanishing cycles need g >= 2");
  const CurveTable table(g);
  const TwistWord w = relation_word(g);

  std::vector<HClass> base;
  for (const auto& l : w.letters)
    for (long i = 0; i < l.exponent; ++i) base.push_back(table.at(l.label));

  if (which.kind == Monodromy::Kind::W) return base;

  std::vector<HClass> out;
  for (const auto& f : wn_conjugators(g, which.n)) {
    const SpMatrix mf = f.label.empty() ? SpMatrix::identity(g) : transvection(table.at(f.label), f.exponent);
    for (const auto& c : base) out.push_back(mf.apply(c).sign_normalized());
  }
  return out;
}

AbelianGroup abelianization(const std::vector<HClass>& classes) {
  if (classes.empty()) throw std::invalid_argument("abelianization needs at least one class to fix the genus");
  const int g = classes.front().genus();
  const auto n = static_cast<std::size_t>(2 * g);
  IntMatrix m(classes.size(), n);
  for (std::size_t r = 0; r < classes.size(); ++r) {
    if (classes[r].genus() != g) throw std::invalid_argument("genus mismatch");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = classes[r][c];
  }
  return AbelianGroup::from_smith(smith_normal_form(m), n);
}

// ------------------------------------------------------------ presentations

void Presentation::validate() const {
  const int limit = generator_count() + static_cast<int>(symbols.size());
  for (const auto& r : relators)
    if (r.max_index() > limit) throw std::invalid_argument("relator uses an undeclared letter");
}

IntMatrix Presentation::relation_matrix() const {
  IntMatrix m(relators.size(), generators.size());
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (const auto& l : relators[r])
      if (!is_symbol(l.index)) m(r, static_cast<std::size_t>(l.index - 1)) += l.sign;
  return m;
}

AbelianGroup Presentation::abelianization() const {
  if (relators.empty()) {
    AbelianGroup a;
    a.free_rank = generators.size();
    return a;
  }
  return AbelianGroup::from_smith(smith_normal_form(relation_matrix()), generators.size());
}

std::string Presentation::to_string() const {
  auto name = [&](int idx) {
    return is_symbol(idx) ? symbols[static_cast<std::size_t>(idx - generator_count() - 1)].name
                          : generators[static_cast<std::size_t>(idx - 1)];
  };
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    os << (r ? ", " : "");
    if (relators[r].empty()) os << '1';
    bool first = true;
    for (const auto& l : relators[r]) {
      os << (first ? "" : " ") << name(l.index) << (l.sign < 0 ? "^-1" : "");
      first = false;
    }
  }
  os << " >";
  if (!symbols.empty()) {
    os << "  where ";
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      os << (s ? ", " : "") << symbols[s].name << " = ";
      for (const auto& [x, y] : symbols[s].factors) os << '[' << x << ',' << y << ']';
      if (symbols[s].factors.empty()) os << '1';
    }
  }
  return os.str();
}

Presentation fiber_sum_presentation(int g, long n) {
  if (g < 2 || g % 2 != 0)
    throw std::invalid_argument("the word-level presentation is only tabulated for even g >= 2");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int r = g / 2;

  Presentation p;
  for (int i = 1; i <= g; ++i) {
    p.generators.push_back("a" + std::to_string(i));
    p.generators.push_back("b" + std::to_string(i));
  }
  const int G = p.generator_count();
  auto a = [](int i) { return Word::generator(2 * i - 1); };
  auto b = [](int i) { return Word::generator(2 * i); };

  // c_j for r <= j <= g; symbol id is G + (j - r + 1).
  for (int j = r; j <= g; ++j) {
    CommutatorSymbol s{"c" + std::to_string(j), {}};
    for (int i = 1; i <= j; ++i) s.factors.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
    p.symbols.push_back(std::move(s));
  }
  auto c = [&](int j) { return Word::generator(G + j - r + 1); };
  auto b_run = [&](int from, int to) {
    Word w;
    for (int i = from; i <= to; ++i) w *= b(i);
    return w;
  };

  Word surface;
  for (int k = 1; k <= g; ++k) surface *= a(k) * b(k) * invert(a(k)) * invert(b(k));
  p.relators.push_back(surface);

  // B_0, ..., B_g in index order.
  std::vector<Word> bw(static_cast<std::size_t>(g + 1));
  bw[0] = b_run(1, g);
  for (int k = 1; k <= r; ++k)
    bw[static_cast<std::size_t>(2 * k - 1)] = a(k) * b_run(k, g + 1 - k) * c(g + 1 - k) * a(g + 1 - k);
  for (int k = 1; k <= r - 1; ++k)
    bw[static_cast<std::size_t>(2 * k)] = a(k) * b_run(k + 1, g - k) * c(g - k) * a(g + 1 - k);
  bw[static_cast<std::size_t>(g)] = a(r) * c(r) * a(r + 1);
  for (auto& w : bw) p.relators.push_back(w);
  p.relators.push_back(c(r));

  for (int k = 1; k <= r - 1; ++k) p.relators.push_back(a(k));
  p.relators.push_back(power(a(r), n));
  for (int k = r + 2; k <= g; ++k) p.relators.push_back(b(k));

  p.validate();
  return p;
}

// ------------------------------------------------------------------- Tietze

namespace {

// Replaces every occurrence of letter `index` by `with` (inverted for ^-1).
Word substitute(const Word& w, int index, const Word& with) {
  const Word inv = invert(with);
  Word out;
  for (const auto& l : w) {
    if (l.index != index)
      out.append(l);
    else
      out *= l.sign > 0 ? with : inv;
  }
  return out;
}

Word rotate(const Word& w, std::size_t start) {
  std::vector<Letter> raw(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
  raw.insert(raw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
  return Word::reduce(raw);
}

}  // namespace

Presentation tietze_eliminate(const Presentation& input) {
  input.validate();
  const int G = input.generator_count();
  const int S = static_cast<int>(input.symbols.size());

  std::vector<Word> rels = input.relators;
  std::vector<bool> gen_alive(static_cast<std::size_t>(G + 1), true);
  std::vector<bool> sym_alive(static_cast<std::size_t>(S + 1), true);
  std::vector<CommutatorSymbol> syms = input.symbols;
  std::set<std::string> trivial;  // generators eliminated to the identity

  auto normalize = [&] {
    // Collapse symbol factors that touch a trivial generator.
    for (int s = 1; s <= S; ++s) {
      if (!sym_alive[static_cast<std::size_t>(s)]) continue;
      auto& f = syms[static_cast<std::size_t>(s - 1)].factors;
      f.erase(std::remove_if(f.begin(), f.end(),
                             [&](const auto& xy) { return trivial.count(xy.first) || trivial.count(xy.second); }),
              f.end());
      if (f.empty()) {
        sym_alive[static_cast<std::size_t>(s)] = false;
        for (auto& r : rels) r = substitute(r, G + s, Word{});
      }
    }
    for (auto& r : rels) r = cyclic_reduce(r);
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word& r) { return r.empty(); }), rels.end());
  };

  for (;;) {
    normalize();
    // Shortest relator first; within it, the first generator occurring exactly once.
    std::vector<std::size_t> order(rels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return rels[x].size() < rels[y].size(); });

    std::optional<std::pair<std::size_t, std::size_t>> pick;  // (relator, position)
    for (std::size_t ri : order) {
      std::map<int, int> count;
      for (const auto& l : rels[ri])
        if (l.index <= G) ++count[l.index];
      for (std::size_t pos = 0; pos < rels[ri].size(); ++pos) {
        const int idx = rels[ri][pos].index;
        if (idx <= G && count[idx] == 1) {
          pick = {ri, pos};
          break;
        }
      }
      if (pick) break;
    }
    if (!pick) break;

    const Word r = rotate(rels[pick->first], pick->second);
    const Letter head = r[0];
    const Word tail = Word::reduce(r.letters().subspan(1));
    // head^e * tail = 1  =>  head = tail^-1 (e = +1) or head = tail (e = -1).
    const Word value = head.sign > 0 ? invert(tail) : tail;
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(pick->first));
    for (auto& other : rels) other = substitute(other, head.index, value);
    gen_alive[static_cast<std::size_t>(head.index)] = false;
    if (value.empty()) trivial.insert(input.generators[static_cast<std::size_t>(head.index - 1)]);
  }

  // Compact the surviving generators and symbols into a fresh index space.
  Presentation out;
  std::vector<int> remap(static_cast<std::size_t>(G + S + 1), 0);
  for (int i = 1; i <= G; ++i)
    if (gen_alive[static_cast<std::size_t>(i)]) {
      out.generators.push_back(input.generators[static_cast<std::size_t>(i - 1)]);
      remap[static_cast<std::size_t>(i)] = out.generator_count();
    }
  const int G2 = out.generator_count();
  for (int s = 1; s <= S; ++s)
    if (sym_alive[static_cast<std::size_t>(s)]) {
      out.symbols.push_back(syms[static_cast<std::size_t>(s - 1)]);
      remap[static_cast<std::size_t>(G + s)] = G2 + static_cast<int>(out.symbols.size());
    }
  for (const auto& r : rels) {
    std::vector<Letter> raw;
    for (const auto& l : r) raw.push_back({remap[static_cast<std::size_t>(l.index)], l.sign});
    out.relators.push_back(Word::reduce(raw));
  }
  return out;
}

}  // namespace twistkit
