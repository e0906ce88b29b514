#include "lot/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lot {

namespace {

// Word as column sequence.
std::vector<int> to_cols(const Word& w, const Alphabet& gens) {
  std::vector<int> out;
  for (const auto& s : w.syllables()) {
    int g = gens.index_of(s.sym);
    int c = CosetTable::col(g, s.exp < 0);
    long n = s.exp > 0 ? s.exp : -static_cast<long>(s.exp);
    for (long i = 0; i < n; ++i) out.push_back(c);
  }
  return out;
}

int inv_col(int c) { return c ^ 1; }

// HLT enumerator with coincidence handling.
class Enumerator {
 public:
  Enumerator(std::size_t ncols, std::size_t max_cosets) : ncols_(ncols), budget_(max_cosets) {
    new_coset();
  }

  bool exceeded() const { return exceeded_; }

  int rep(int c) {
    while (p_[static_cast<std::size_t>(c)] != c) {
      p_[static_cast<std::size_t>(c)] =
          p_[static_cast<std::size_t>(p_[static_cast<std::size_t>(c)])];
      c = p_[static_cast<std::size_t>(c)];
    }
    return c;
  }

  int get(int c, int col) const {
    return tab_[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
  }

  void set_pair(int c, int col, int d) {
    tab_[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)] = d;
    tab_[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv_col(col))] = c;
  }

  int define(int c, int col) {
    if (count_ >= budget_) {
      exceeded_ = true;
      return -1;
    }
    int d = new_coset();
    set_pair(c, col, d);
    return d;
  }

  // Scan `cols` at coset c and fill gaps, defining new cosets as needed.
  // Table entries may point at dead cosets after coincidences, so every
  // lookup is canonicalized through rep().
  void scan_and_fill(int c, const std::vector<int>& cols) {
    c = rep(c);
    std::size_t i = 0, j = cols.size();
    int front = c, back = c;
    for (;;) {
      while (i < j) {
        int t = get(front, cols[i]);
        if (t == -1) break;
        front = rep(t);
        ++i;
      }
      if (i == j) {
        if (front != back) coincide(front, back);
        return;
      }
      while (j > i) {
        int t = get(back, inv_col(cols[j - 1]));
        if (t == -1) break;
        back = rep(t);
        --j;
      }
      if (i == j) {
        if (front != back) coincide(front, back);
        return;
      }
      if (i + 1 == j) {
        set_pair(front, cols[i], back);
        return;
      }
      int d = define(front, cols[i]);
      if (d == -1) return;  // budget
      front = d;
      ++i;
    }
  }

  void coincide(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int dead = queue_.front();
      queue_.pop_front();
      for (std::size_t col = 0; col < ncols_; ++col) {
        int d = tab_[static_cast<std::size_t>(dead)][col];
        if (d == -1) continue;
        tab_[static_cast<std::size_t>(dead)][col] = -1;
        // transfer the edge dead --col--> d to the representatives
        int e = rep(dead), f = rep(d);
        int cur = get(e, static_cast<int>(col));
        if (cur != -1) {
          merge(cur, f);
        } else {
          int back = get(f, inv_col(static_cast<int>(col)));
          if (back != -1 && rep(back) != e) merge(back, e);
          set_pair(e, static_cast<int>(col), f);
        }
      }
    }
  }

  // Compacted live table.
  std::vector<std::vector<int>> compact() {
    std::vector<int> index(tab_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < tab_.size(); ++c)
      if (rep(static_cast<int>(c)) == static_cast<int>(c)) index[c] = next++;
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(next));
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      if (index[c] == -1) continue;
      std::vector<int> row(ncols_, -1);
      for (std::size_t col = 0; col < ncols_; ++col) {
        int d = tab_[c][col];
        if (d != -1) row[col] = index[static_cast<std::size_t>(rep(d))];
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  bool is_live(int c) { return rep(c) == c; }
  int total() const { return static_cast<int>(tab_.size()); }

 private:
  int new_coset() {
    tab_.emplace_back(ncols_, -1);
    p_.push_back(static_cast<int>(tab_.size()) - 1);
    ++count_;
    return static_cast<int>(tab_.size()) - 1;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[static_cast<std::size_t>(b)] = a;
    queue_.push_back(b);
  }

  std::size_t ncols_;
  std::size_t budget_;
  std::size_t count_ = 0;
  bool exceeded_ = false;
  std::vector<std::vector<int>> tab_;
  std::vector<int> p_;
  std::deque<int> queue_;
};

}  // namespace

CosetTable::CosetTable(Alphabet gens, std::vector<std::vector<int>> rows, TableStatus status,
                       std::vector<Word> subgroup_gens)
    : gens_(std::move(gens)),
      rows_(std::move(rows)),
      status_(status),
      subgroup_gens_(std::move(subgroup_gens)) {}

int CosetTable::trace(int coset, const Word& w) const {
  for (int c : to_cols(w, gens_)) {
    coset = act(coset, c);
    if (coset == -1) return -1;
  }
  return coset;
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        const TcOptions& opts) {
  validate_presentation(p);
  for (const auto& g : subgroup_gens)
    for (const auto& s : g.syllables())
      if (!p.gens.contains(s.sym))
        throw std::invalid_argument("todd_coxeter: subgroup generator uses unknown symbol '" +
                                    s.sym + "'");
  const std::size_t ncols = 2 * p.gens.size();
  Enumerator en(ncols, opts.max_cosets);

  std::vector<std::vector<int>> rel_cols;
  for (const auto& r : p.relators) rel_cols.push_back(to_cols(r, p.gens));

  for (const auto& g : subgroup_gens) {
    en.scan_and_fill(0, to_cols(g, p.gens));
    if (en.exceeded()) break;
  }
  for (int c = 0; c < en.total() && !en.exceeded(); ++c) {
    if (!en.is_live(c)) continue;
    for (const auto& cols : rel_cols) {
      en.scan_and_fill(c, cols);
      if (en.exceeded()) break;
      if (!en.is_live(c)) break;
    }
    // keep every column defined so the table closes even for generators
    // missing from all relators
    for (std::size_t col = 0; col < ncols && !en.exceeded(); ++col) {
      if (!en.is_live(c)) break;
      if (en.get(c, static_cast<int>(col)) == -1) en.define(c, static_cast<int>(col));
    }
  }

  TableStatus status = en.exceeded() ? TableStatus::budget_exceeded : TableStatus::closed;
  return CosetTable(p.gens, en.compact(), status, subgroup_gens);
}

bool verify_table(const CosetTable& table, const Presentation& p) {
  if (table.status() != TableStatus::closed) return false;
  const int n = static_cast<int>(table.index());
  for (int c = 0; c < n; ++c) {
    for (const auto& r : p.relators)
      if (table.trace(c, r) != c) return false;
    for (std::size_t g = 0; g < table.gens().size(); ++g) {
      int fwd = table.act(c, CosetTable::col(static_cast<int>(g), false));
      if (fwd < 0 || fwd >= n) return false;
      if (table.act(fwd, CosetTable::col(static_cast<int>(g), true)) != c) return false;
    }
  }
  for (const auto& g : table.subgroup_gens())
    if (table.trace(0, g) != 0) return false;
  return true;
}

std::vector<Word> coset_reps(const CosetTable& table) {
  const int n = static_cast<int>(table.index());
  std::vector<Word> reps(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    for (std::size_t g = 0; g < table.gens().size(); ++g) {
      for (bool inv : {false, true}) {
        int d = table.act(c, CosetTable::col(static_cast<int>(g), inv));
        if (d == -1 || seen[static_cast<std::size_t>(d)]) continue;
        seen[static_cast<std::size_t>(d)] = 1;
        reps[static_cast<std::size_t>(d)] =
            reps[static_cast<std::size_t>(c)] * Word({{table.gens().at(g), inv ? -1 : 1}});
        q.push_back(d);
      }
    }
  }
  return reps;
}

std::string to_csv(const CosetTable& table) {
  std::string out = "coset";
  for (const auto& g : table.gens().symbols()) out += "," + g + "," + g + "^-1";
  out += "\n";
  for (std::size_t c = 0; c < table.index(); ++c) {
    out += std::to_string(c + 1);
    for (std::size_t g = 0; g < table.gens().size(); ++g)
      for (bool inv : {false, true})
        out += "," + std::to_string(table.act(static_cast<int>(c),
                                              CosetTable::col(static_cast<int>(g), inv)) +
                                    1);
    out += "\n";
  }
  return out;
}

}  // namespace lot
