#include "laperfect/construction.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "laperfect/analysis.hpp"
#include "laperfect/components.hpp"
#include "laperfect/scaffold.hpp"

namespace laperfect {

namespace {

std::string line_error(std::size_t line, const std::string& what) {
  return "tree file line " + std::to_string(line) + ": " + what;
}

std::size_t parse_index(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  }
  return value;
}

std::vector<Bits> v_words(unsigned n, unsigned t) {
  std::vector<Bits> out;
  for (const Word& w : v_set(n, t)) out.push_back(w.bits());
  return out;
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::LA1:
      return "la1";
    case Mode::LA2:
      return "la2";
    default:
      return "la3";
  }
}

Mode parse_mode(std::string_view text) {
  if (text == "la1") return Mode::LA1;
  if (text == "la2") return Mode::LA2;
  if (text == "la3") return Mode::LA3;
  throw std::invalid_argument("mode must be la1, la2 or la3, got '" + std::string(text) + "'");
}

AssignmentTree::AssignmentTree(unsigned n, Mode mode) : n_(n), m_(log2_length(n)), mode_(mode) {
  if (m_ < 2) throw std::invalid_argument("assignment trees need n >= 4");
  for (unsigned t = 2; t <= m_; ++t) levels_.emplace_back(slot_count(t));
}

AssignmentTree AssignmentTree::identity(unsigned n, Mode mode) {
  AssignmentTree tree(n, mode);
  for (unsigned t = 2; t <= tree.m_; ++t) {
    for (std::size_t slot = 0; slot < tree.slot_count(t); ++slot) {
      if (mode == Mode::LA1) {
        tree.set(t, slot, Isometry::identity(n));
      } else {
        tree.set(t, slot, identity_rep(n, t - 1));
      }
    }
  }
  return tree;
}

std::size_t AssignmentTree::slot_count(unsigned t) const {
  if (t < 2 || t > m_) throw std::out_of_range("tree level out of range");
  std::size_t count = 1;
  for (unsigned i = t; i < m_; ++i) count *= v_size(n_, i);
  return count;
}

std::vector<Assignment>& AssignmentTree::level(unsigned t) {
  if (t < 2 || t > m_) throw std::out_of_range("tree level out of range");
  return levels_[t - 2];
}

const std::vector<Assignment>& AssignmentTree::level(unsigned t) const {
  if (t < 2 || t > m_) throw std::out_of_range("tree level out of range");
  return levels_[t - 2];
}

const Assignment& AssignmentTree::at(unsigned t, std::size_t slot) const { return level(t).at(slot); }

void AssignmentTree::set(unsigned t, std::size_t slot, const DRep& rep) {
  if (mode_ == Mode::LA1) throw std::invalid_argument("LA1 trees hold raw isometries");
  if (rep.n != n_ || rep.t != t - 1) throw std::invalid_argument("representative belongs to another level");
  level(t).at(slot) = Assignment{rep, realize(rep)};
}

void AssignmentTree::set(unsigned t, std::size_t slot, const Isometry& map) {
  if (mode_ != Mode::LA1) throw std::invalid_argument("LA2/LA3 trees hold representatives");
  if (map.length() != n_) throw std::invalid_argument("isometry length mismatch");
  level(t).at(slot) = Assignment{std::nullopt, map};
}

std::vector<std::size_t> AssignmentTree::path_of(unsigned t, std::size_t slot) const {
  if (slot >= slot_count(t)) throw std::out_of_range("slot out of range");
  std::vector<std::size_t> path;
  for (unsigned i = t; i < m_; ++i) {
    path.push_back(slot % v_size(n_, i));
    slot /= v_size(n_, i);
  }
  return path;
}

std::size_t AssignmentTree::index_of(unsigned t, std::span<const std::size_t> path) const {
  if (t < 2 || t > m_ || path.size() != m_ - t) throw std::invalid_argument("path length does not match the level");
  std::size_t slot = 0;
  for (unsigned i = m_; i-- > t;) {
    const std::size_t digit = path[i - t];
    if (digit >= v_size(n_, i)) throw std::invalid_argument("path index exceeds |V^" + std::to_string(i) + "|");
    slot = slot * v_size(n_, i) + digit;
  }
  return slot;
}

std::vector<Isometry> collection(const AssignmentTree& tree, unsigned t, std::size_t suffix) {
  const std::size_t width = v_size(tree.length(), t);
  std::vector<Isometry> out;
  for (std::size_t i = 0; i < width; ++i) out.push_back(tree.at(t, suffix * width + i).map);
  return out;
}

TreeVerdict validate_tree(const AssignmentTree& tree) {
  const unsigned n = tree.length();
  const unsigned m = tree.levels();
  for (unsigned t = 2; t <= m; ++t) {
    for (std::size_t slot = 0; slot < tree.slot_count(t); ++slot) {
      const Assignment& a = tree.at(t, slot);
      std::string problem;
      if (a.map.length() != n) {
        problem = "missing assignment";
      } else if (tree.mode() == Mode::LA1) {
        if (!in_a(a.map, t - 1)) problem = "isometry is not in A^" + std::to_string(t - 1);
      } else if (!a.rep) {
        problem = "missing representative";
      } else {
        try {
          validate(*a.rep);
          if (a.rep->n != n || a.rep->t != t - 1) {
            problem = "representative is not in D^" + std::to_string(t - 1);
          } else if (!(a.map == realize(*a.rep))) {
            problem = "stored map differs from its representative";
          }
        } catch (const std::invalid_argument& e) {
          problem = e.what();
        }
      }
      if (!problem.empty()) {
        return {false, "t=" + std::to_string(t) + " slot=" + std::to_string(slot) + ": " + problem, t, std::nullopt};
      }
    }
  }
  if (tree.mode() != Mode::LA3) return {};
  for (unsigned t = 2; t < m; ++t) {
    const auto subspace = v_set(n, t);
    for (std::size_t suffix = 0; suffix < tree.slot_count(t + 1); ++suffix) {
      if (is_degenerate(collection(tree, t, suffix), subspace)) {
        return {false, "t=" + std::to_string(t) + " suffix=" + std::to_string(suffix) + ": degenerate collection", t,
                suffix};
      }
    }
  }
  return {};
}

CodeSet build_code(const AssignmentTree& tree) {
  const TreeVerdict verdict = validate_tree(tree);
  if (!verdict.valid) throw std::invalid_argument("invalid tree: " + verdict.violation);
  const unsigned n = tree.length();
  const unsigned m = tree.levels();

  // psi[s]: composed map carrying A^t_s into the code, for the current t.
  std::vector<Isometry> psi{tree.at(m, 0).map};
  for (unsigned t = m - 1; t >= 2; --t) {
    const auto shifts = v_words(n, t);
    std::vector<Isometry> next;
    next.reserve(tree.slot_count(t));
    for (std::size_t slot = 0; slot < tree.slot_count(t); ++slot) {
      const Isometry& parent = psi[slot / shifts.size()];
      const Isometry step = compose(Isometry::translation(Word(n, shifts[slot % shifts.size()])), tree.at(t, slot).map);
      next.push_back(compose(parent, step));
    }
    psi = std::move(next);
  }

  const auto leaf = v_words(n, 1);
  std::vector<Bits> words;
  words.reserve(psi.size() * leaf.size());
  for (const Isometry& g : psi) {
    const IsometryTable table(g);
    for (Bits w : leaf) words.push_back(table(w));
  }
  return CodeSet(n, std::move(words));
}

CodeSet build_level(const AssignmentTree& tree, unsigned t, std::size_t suffix) {
  const unsigned n = tree.length();
  if (t < 1 || t >= tree.levels()) throw std::out_of_range("intermediate level out of range");
  if (t == 1) return CodeSet(n, v_words(n, 1));
  const auto shifts = v_words(n, t);
  std::vector<Bits> words;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const std::size_t slot = suffix * shifts.size() + i;
    const CodeSet child = apply_set(tree.at(t, slot).map, build_level(tree, t - 1, slot));
    for (Bits w : child.raw()) words.push_back(w ^ shifts[i]);
  }
  return CodeSet(n, std::move(words));
}

AssignmentTree sample_tree(unsigned n, std::uint64_t seed, Mode mode) {
  AssignmentTree tree(n, mode);
  const unsigned m = tree.levels();
  Rng root(derive_seed({seed, m, 0}));
  if (mode == Mode::LA1) {
    tree.set(m, 0, sample_a(n, m - 1, root));
  } else {
    tree.set(m, 0, sample_d(n, m - 1, root));
  }
  for (unsigned t = 2; t < m; ++t) {
    const std::size_t width = v_size(n, t);
    const auto subspace = v_set(n, t);
    for (std::size_t suffix = 0; suffix < tree.slot_count(t + 1); ++suffix) {
      Rng rng(derive_seed({seed, t, suffix}));
      for (unsigned attempt = 0;; ++attempt) {
        if (attempt == kRejectionCap) {
          throw std::runtime_error("no nondegenerate collection after " + std::to_string(kRejectionCap) +
                                   " draws at t=" + std::to_string(t));
        }
        for (std::size_t i = 0; i < width; ++i) {
          if (mode == Mode::LA1) {
            tree.set(t, suffix * width + i, sample_a(n, t - 1, rng));
          } else {
            tree.set(t, suffix * width + i, sample_d(n, t - 1, rng));
          }
        }
        if (mode != Mode::LA3 || !is_degenerate(collection(tree, t, suffix), subspace)) break;
      }
    }
  }
  return tree;
}

CodeSet puncture(const CodeSet& code) {
  if (!verify_extended_perfect(code).extended_perfect()) {
    throw std::invalid_argument("puncture needs an extended 1-perfect code");
  }
  std::vector<Bits> out;
  out.reserve(code.size());
  for (Bits w : code.raw()) out.push_back(w >> 1);
  return CodeSet(code.length() - 1, std::move(out));
}

std::string serialize_tree(const AssignmentTree& tree) {
  std::ostringstream out;
  out << "n=" << tree.length() << "\nmode=" << to_string(tree.mode()) << "\n";
  for (unsigned t = 2; t <= tree.levels(); ++t) {
    for (std::size_t slot = 0; slot < tree.slot_count(t); ++slot) {
      const auto path = tree.path_of(t, slot);
      out << "assign t=" << t << " path=";
      if (path.empty()) out << '-';
      for (std::size_t i = 0; i < path.size(); ++i) out << (i ? "," : "") << path[i];
      const Assignment& a = tree.at(t, slot);
      out << " rep=" << (a.rep ? to_string(*a.rep) : a.map.to_string()) << "\n";
    }
  }
  return out.str();
}

AssignmentTree parse_tree(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.size() < 2 || !lines[0].starts_with("n=")) throw std::invalid_argument(line_error(1, "expected n=<int>"));
  unsigned n = 0;
  try {
    n = static_cast<unsigned>(parse_index(lines[0].substr(2)));
    log2_length(n);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(line_error(1, e.what()));
  }
  if (n < 4 || n > 32) throw std::invalid_argument(line_error(1, "n must be a power of two in 4..32"));
  if (!lines[1].starts_with("mode=")) throw std::invalid_argument(line_error(2, "expected mode=<la1|la2|la3>"));
  Mode mode;
  try {
    mode = parse_mode(lines[1].substr(5));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(line_error(2, e.what()));
  }

  AssignmentTree tree(n, mode);
  std::vector<std::vector<bool>> seen;
  for (unsigned t = 2; t <= tree.levels(); ++t) seen.emplace_back(tree.slot_count(t), false);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line.empty()) continue;
    try {
      if (!line.starts_with("assign t=")) throw std::invalid_argument("expected 'assign t=<t> path=<...> rep=<...>'");
      const std::size_t path_at = line.find(" path=");
      const std::size_t rep_at = line.find(" rep=");
      if (path_at == std::string_view::npos || rep_at == std::string_view::npos || rep_at < path_at) {
        throw std::invalid_argument("expected 'assign t=<t> path=<...> rep=<...>'");
      }
      const auto t = static_cast<unsigned>(parse_index(line.substr(9, path_at - 9)));
      if (t < 2 || t > tree.levels()) throw std::invalid_argument("level t out of range");
      const std::string_view path_text = line.substr(path_at + 6, rep_at - path_at - 6);
      std::vector<std::size_t> path;
      if (path_text != "-") {
        for (std::size_t pos = 0; pos <= path_text.size();) {
          const std::size_t end = std::min(path_text.find(',', pos), path_text.size());
          path.push_back(parse_index(path_text.substr(pos, end - pos)));
          pos = end + 1;
        }
      }
      const std::size_t slot = tree.index_of(t, path);
      if (seen[t - 2][slot]) throw std::invalid_argument("duplicate assignment");
      seen[t - 2][slot] = true;
      const std::string_view rep = line.substr(rep_at + 5);
      if (mode == Mode::LA1) {
        tree.set(t, slot, Isometry::parse(rep, n));
      } else {
        tree.set(t, slot, parse_drep(rep, n));
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(line_error(i + 1, e.what()));
    } catch (const std::out_of_range& e) {
      throw std::invalid_argument(line_error(i + 1, e.what()));
    }
  }
  for (unsigned t = 2; t <= tree.levels(); ++t) {
    for (std::size_t slot = 0; slot < tree.slot_count(t); ++slot) {
      if (!seen[t - 2][slot]) {
        std::string path;
        for (std::size_t d : tree.path_of(t, slot)) path += (path.empty() ? "" : ",") + std::to_string(d);
        throw std::invalid_argument("tree file: missing assignment t=" + std::to_string(t) +
                                    " path=" + (path.empty() ? "-" : path));
      }
    }
  }
  return tree;
}

}  // namespace laperfect
