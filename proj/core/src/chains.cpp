#include "absorb/chains.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "absorb/quasi.hpp"

namespace absorb {

ChainSemigroup::ChainSemigroup(std::vector<Block> blocks, bool twin_top)
    : blocks_(std::move(blocks)), twin_top_(twin_top) {
  if (blocks_.empty()) throw BadParameter("chain needs at least one block");
  for (const Block& b : blocks_) {
    if (b.kind == BlockKind::Fin && b.size < 1) throw BadParameter("fin block needs size >= 1");
  }
  if (twin_top_ && !top_block_has_greatest()) {
    throw BadParameter("twin_top gadget needs a top block with a greatest element (fin or omega_star)");
  }
}

bool ChainSemigroup::top_block_has_greatest() const {
  return blocks_.back().kind != BlockKind::Omega;
}

int ChainSemigroup::rees_compare(ChainAddr a, ChainAddr b) const {
  if (a.block != b.block) return a.block < b.block ? -1 : 1;
  if (a.offset == b.offset) return 0;
  bool a_less = a.offset < b.offset;
  if (blocks_[a.block].kind == BlockKind::OmegaStar) a_less = !a_less;  // offset 0 is greatest
  return a_less ? -1 : 1;
}

std::string ChainSemigroup::render_elem(ChainAddr a) const {
  return "b" + std::to_string(a.block) + "[" + std::to_string(a.offset) + "]";
}

SymbolicSet::SymbolicSet(const ChainSemigroup& chain) : parts_(chain.blocks().size()) {}

SymbolicSet SymbolicSet::empty_set(const ChainSemigroup& chain) { return SymbolicSet(chain); }

SymbolicSet SymbolicSet::all_set(const ChainSemigroup& chain) {
  SymbolicSet s(chain);
  for (std::size_t i = 0; i < s.parts_.size(); ++i) s.parts_[i].whole = true;
  if (chain.twin_top()) s.set_gadget(true, true);
  return s;
}

void SymbolicSet::set_block_whole(std::size_t block) {
  parts_[block].whole = true;
  parts_[block].offsets.clear();
}

void SymbolicSet::add_offset(const ChainSemigroup& chain, ChainAddr addr) {
  BlockPart& part = parts_[addr.block];
  if (part.whole) return;
  auto it = std::lower_bound(part.offsets.begin(), part.offsets.end(), addr.offset);
  if (it != part.offsets.end() && *it == addr.offset) return;
  part.offsets.insert(it, addr.offset);
  // normal form: a fully covered finite block is stored as "whole"
  const Block& b = chain.blocks()[addr.block];
  if (b.kind == BlockKind::Fin && part.offsets.size() == b.size) set_block_whole(addr.block);
}

void SymbolicSet::set_gadget(bool e, bool f) {
  has_e_ = e;
  has_f_ = f;
}

bool SymbolicSet::contains(ChainAddr addr) const {
  const BlockPart& part = parts_[addr.block];
  if (part.whole) return true;
  return std::binary_search(part.offsets.begin(), part.offsets.end(), addr.offset);
}

bool SymbolicSet::is_empty() const {
  for (const auto& p : parts_) {
    if (p.whole || !p.offsets.empty()) return false;
  }
  return !has_e_ && !has_f_;
}

std::optional<std::vector<ChainAddr>> SymbolicSet::finite_chain_members(
    const ChainSemigroup& chain) const {
  std::vector<ChainAddr> out;
  for (std::size_t b = 0; b < parts_.size(); ++b) {
    if (parts_[b].whole) {
      if (chain.blocks()[b].kind != BlockKind::Fin) return std::nullopt;
      for (std::size_t off = 0; off < chain.blocks()[b].size; ++off) out.push_back({b, off});
    } else {
      for (std::size_t off : parts_[b].offsets) out.push_back({b, off});
    }
  }
  return out;
}

bool SymbolicSet::is_all(const ChainSemigroup& chain) const {
  for (const auto& p : parts_) {
    if (!p.whole) return false;
  }
  if (chain.twin_top() && (!has_e_ || !has_f_)) return false;
  return true;
}

bool SymbolicSet::is_subset_of(const SymbolicSet& other) const {
  if (parts_.size() != other.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (other.parts_[i].whole) continue;
    if (parts_[i].whole) return false;  // whole infinite or normalized-finite vs finite list
    for (std::size_t off : parts_[i].offsets) {
      if (!std::binary_search(other.parts_[i].offsets.begin(), other.parts_[i].offsets.end(), off))
        return false;
    }
  }
  if (has_e_ && !other.has_e_) return false;
  if (has_f_ && !other.has_f_) return false;
  return true;
}

bool SymbolicSet::operator==(const SymbolicSet& other) const {
  if (parts_.size() != other.parts_.size() || has_e_ != other.has_e_ || has_f_ != other.has_f_)
    return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].whole != other.parts_[i].whole || parts_[i].offsets != other.parts_[i].offsets)
      return false;
  }
  return true;
}

std::string SymbolicSet::render(const ChainSemigroup& chain) const {
  if (is_empty()) return "EMPTY";
  if (is_all(chain)) return "ALL";
  std::string out;
  auto append = [&](const std::string& piece) {
    if (!out.empty()) out += " u ";
    out += piece;
  };
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].whole) {
      append("b" + std::to_string(i) + "[*]");
    } else {
      for (std::size_t off : parts_[i].offsets) {
        append(chain.render_elem({i, off}));
      }
    }
  }
  if (has_e_ && has_f_) {
    append("{E,F}");
  } else if (has_e_) {
    append("E");
  } else if (has_f_) {
    append("F");
  }
  return out;
}

SymbolicSet symbolic_a_w(const ChainSemigroup& chain) {
  // Every chain element is quasi-absorbing: its E<= is the chain below it
  // (totally ordered) and everything above, gadget included, meets it at
  // itself. A gadget element fails absorption because E+F is the chain top.
  SymbolicSet s(chain);
  for (std::size_t i = 0; i < chain.blocks().size(); ++i) s.set_block_whole(i);
  return s;  // without a gadget this normalizes to ALL via is_all()
}

SymbolicSet symbolic_a_fin(const ChainSemigroup& chain) {
  SymbolicSet s(chain);
  for (std::size_t i = 0; i < chain.blocks().size(); ++i) {
    const Block& b = chain.blocks()[i];
    if (b.kind == BlockKind::OmegaStar) break;  // infinitely many predecessors inside the block
    s.set_block_whole(i);                       // Fin and Omega positions all qualify
    if (b.kind == BlockKind::Omega) break;      // blocks above now have infinite E<=
  }
  return s;
}

SymbolicSet symbolic_a_s(const ChainSemigroup& chain) {
  // Stage iteration at block granularity: a Fin block is removed in size
  // many stages; an Omega block is consumed stage by stage without ever
  // exhausting, so every one of its elements is removed at some finite stage
  // but no later block is reached; an OmegaStar block has no Rees-least
  // element at any stage, so iteration stops before it. A remaining gadget
  // pair is never absorbing since E+F falls below both.
  SymbolicSet s(chain);
  for (std::size_t i = 0; i < chain.blocks().size(); ++i) {
    const Block& b = chain.blocks()[i];
    if (b.kind == BlockKind::Fin) {
      s.set_block_whole(i);
      continue;
    }
    if (b.kind == BlockKind::Omega) s.set_block_whole(i);
    break;
  }
  return s;
}

SymbolicSet symbolic_primitives(const ChainSemigroup& chain, WhichIdeal which) {
  SymbolicSet a = which == WhichIdeal::AFin ? symbolic_a_fin(chain) : symbolic_a_w(chain);
  SymbolicSet p(chain);
  for (std::size_t i = 0; i < chain.blocks().size(); ++i) {
    if (a.block_whole(i)) continue;
    // The remainder starts with this whole block (a_fin/a_w never cover a
    // block partially). A least element exists unless the block is OmegaStar.
    if (chain.blocks()[i].kind == BlockKind::OmegaStar) return p;  // EMPTY
    p.add_offset(chain, {i, 0});
    return p;
  }
  // chain part fully inside A: the remainder is the gadget (or nothing)
  if (chain.twin_top()) p.set_gadget(true, true);
  return p;
}

Truncation truncate(const ChainSemigroup& chain, std::size_t k) {
  if (k < 1) throw BadK("truncation window must be >= 1");
  std::vector<ChainAddr> addrs;
  for (std::size_t i = 0; i < chain.blocks().size(); ++i) {
    const Block& b = chain.blocks()[i];
    std::size_t kept = b.kind == BlockKind::Fin ? b.size : k;
    for (std::size_t off = 0; off < kept; ++off) addrs.push_back({i, off});
  }
  std::size_t m = addrs.size();
  std::size_t n = m + (chain.twin_top() ? 2 : 0);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const ChainAddr& a : addrs) labels.push_back(chain.render_elem(a));

  // the Rees-greatest kept chain element, used for E+F
  std::size_t top = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (chain.rees_compare(addrs[i], addrs[top]) > 0) top = i;
  }

  std::vector<FiniteSemigroup::elem> table(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> FiniteSemigroup::elem& { return table[i * n + j]; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      at(i, j) = static_cast<FiniteSemigroup::elem>(
          chain.rees_compare(addrs[i], addrs[j]) <= 0 ? i : j);
    }
  }
  std::optional<std::size_t> e_index, f_index;
  if (chain.twin_top()) {
    std::size_t e = m, f = m + 1;
    e_index = e;
    f_index = f;
    labels.emplace_back("E");
    labels.emplace_back("F");
    for (std::size_t i = 0; i < m; ++i) {
      at(e, i) = at(i, e) = static_cast<FiniteSemigroup::elem>(i);
      at(f, i) = at(i, f) = static_cast<FiniteSemigroup::elem>(i);
    }
    at(e, e) = static_cast<FiniteSemigroup::elem>(e);
    at(f, f) = static_cast<FiniteSemigroup::elem>(f);
    at(e, f) = at(f, e) = static_cast<FiniteSemigroup::elem>(top);
  }
  return Truncation{FiniteSemigroup::validate_packed(n, std::move(table), std::move(labels)),
                    std::move(addrs), e_index, f_index};
}

ElemSet Truncation::chain_part() const {
  ElemSet out(table.size());
  for (std::size_t i = 0; i < chain_addrs.size(); ++i) out.add(i);
  return out;
}

ElemSet Truncation::restrict(const SymbolicSet& set) const {
  ElemSet out(table.size());
  for (std::size_t i = 0; i < chain_addrs.size(); ++i) {
    if (set.contains(chain_addrs[i])) out.add(i);
  }
  if (e_index && set.contains_e()) out.add(*e_index);
  if (f_index && set.contains_f()) out.add(*f_index);
  return out;
}

CrossCheckReport cross_check(const ChainSemigroup& chain, std::size_t k) {
  Truncation t = truncate(chain, k);
  const FiniteSemigroup& s = t.table;
  CrossCheckReport report;

  auto classify = [&](const ElemSet& symbolic, const ElemSet& finite) {
    if (symbolic == finite) return CrossCheckReport::Status::Agree;
    // Truncating can only create new stepwise-absorbing structure at the
    // bottom, never remove any, so the symbolic set must survive inside the
    // finite one; anything else is a genuine failure.
    if (symbolic.is_subset_of(finite)) return CrossCheckReport::Status::ExpectedDivergence;
    return CrossCheckReport::Status::Fail;
  };
  auto row = [&](const std::string& quantity, const SymbolicSet& symbolic, const ElemSet& finite) {
    ElemSet restricted = t.restrict(symbolic);
    report.rows.push_back({quantity, symbolic.render(chain), s.label_set(finite),
                           classify(restricted, finite)});
  };

  row("A_s", symbolic_a_s(chain), stepwise_quasi_absorbing(s).set);
  row("A_fin", symbolic_a_fin(chain), a_fin(s));
  row("A", symbolic_a_w(chain), a_w(s));

  if (chain.twin_top()) {
    ElemSet lin = e_lin(s);
    bool fin_lin = lin.contains(*t.e_index) && lin.contains(*t.f_index);
    // E<=(E) is the chain plus E itself, a chain, so the gadget always sits
    // inside E^lin symbolically; the finite side must agree exactly.
    report.rows.push_back({"E_lin gadget", "true", fin_lin ? "true" : "false",
                           fin_lin ? CrossCheckReport::Status::Agree
                                   : CrossCheckReport::Status::Fail});

    ElemSet p_fin = primitives(s, t.chain_part());
    ElemSet p_sym = t.restrict(symbolic_primitives(chain, WhichIdeal::AW));
    report.rows.push_back({"P(chain ideal)",
                           symbolic_primitives(chain, WhichIdeal::AW).render(chain),
                           s.label_set(p_fin),
                           p_fin == p_sym ? CrossCheckReport::Status::Agree
                                          : CrossCheckReport::Status::Fail});
  }
  return report;
}

namespace {

std::string trim(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = text.find_last_not_of(" \t\r\n");
  return text.substr(b, e - b + 1);
}

Block parse_block(const std::string& token) {
  std::string t = trim(token);
  if (t == "omega") return {BlockKind::Omega};
  if (t == "omega_star") return {BlockKind::OmegaStar};
  if (t.rfind("fin:", 0) == 0) {
    long long size = 0;
    try {
      size = std::stoll(t.substr(4));
    } catch (const std::exception&) {
      throw BadParameter("bad fin size in block: " + t);
    }
    if (size < 1) throw BadParameter("fin block needs size >= 1");
    return {BlockKind::Fin, static_cast<std::size_t>(size)};
  }
  throw BadParameter("unknown block kind: " + t);
}

std::string block_str(const Block& b) {
  switch (b.kind) {
    case BlockKind::Fin: return "fin:" + std::to_string(b.size);
    case BlockKind::Omega: return "omega";
    case BlockKind::OmegaStar: return "omega_star";
  }
  return "?";
}

}  // namespace

ChainSemigroup parse_chain_text(const std::string& text) {
  std::vector<Block> blocks;
  bool gadget = false;
  bool saw_blocks = false;
  std::stringstream in(text);
  std::string clause;
  std::string joined;
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty() && trim(line)[0] == '#') continue;
    joined += line + " ";
  }
  std::stringstream clauses(joined);
  while (std::getline(clauses, clause, ';')) {
    clause = trim(clause);
    if (clause.empty()) continue;
    std::size_t eq = clause.find('=');
    if (eq == std::string::npos) throw BadParameter("expected key = value, got: " + clause);
    std::string key = trim(clause.substr(0, eq));
    std::string value = trim(clause.substr(eq + 1));
    if (key == "blocks") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw BadParameter("blocks value must be a [...] list");
      std::string body = value.substr(1, value.size() - 2);
      std::stringstream items(body);
      std::string item;
      while (std::getline(items, item, ',')) {
        if (!trim(item).empty()) blocks.push_back(parse_block(item));
      }
      saw_blocks = true;
    } else if (key == "gadget") {
      if (value == "twin_top") {
        gadget = true;
      } else if (value == "none") {
        gadget = false;
      } else {
        throw BadParameter("unknown gadget: " + value);
      }
    } else {
      throw BadParameter("unknown key: " + key);
    }
  }
  if (!saw_blocks) throw BadParameter("chain spec needs a blocks clause");
  return ChainSemigroup(std::move(blocks), gadget);
}

std::string write_chain_text(const ChainSemigroup& chain) {
  std::string out = "blocks = [";
  for (std::size_t i = 0; i < chain.blocks().size(); ++i) {
    if (i != 0) out += ", ";
    out += block_str(chain.blocks()[i]);
  }
  out += "]";
  if (chain.twin_top()) out += "; gadget = twin_top";
  out += "\n";
  return out;
}

ChainSemigroup parse_chain_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadParameter(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("blocks")) throw BadParameter("chain JSON needs \"blocks\"");
  std::vector<Block> blocks;
  for (const auto& item : j.at("blocks")) blocks.push_back(parse_block(item.get<std::string>()));
  bool gadget = false;
  if (j.contains("gadget") && !j.at("gadget").is_null()) {
    std::string v = j.at("gadget").get<std::string>();
    if (v == "twin_top") {
      gadget = true;
    } else if (v != "none") {
      throw BadParameter("unknown gadget: " + v);
    }
  }
  return ChainSemigroup(std::move(blocks), gadget);
}

std::string write_chain_json(const ChainSemigroup& chain) {
  nlohmann::ordered_json j;
  std::vector<std::string> blocks;
  for (const Block& b : chain.blocks()) blocks.push_back(block_str(b));
  j["blocks"] = blocks;
  if (chain.twin_top()) j["gadget"] = "twin_top";
  return j.dump();
}

ChainSemigroup parse_chain_auto(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_chain_json(text);
    break;
  }
  return parse_chain_text(text);
}

ChainSemigroup load_chain_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_chain_auto(buf.str());
}

ChainSemigroup random_chain(SplitMix64& rng) {
  std::size_t count = 1 + rng.below(4);
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < count; ++i) {
    switch (rng.below(3)) {
      case 0: blocks.push_back({BlockKind::Fin, 1 + rng.below(4)}); break;
      case 1: blocks.push_back({BlockKind::Omega}); break;
      default: blocks.push_back({BlockKind::OmegaStar}); break;
    }
  }
  bool gadget = blocks.back().kind != BlockKind::Omega && rng.below(2) == 0;
  return ChainSemigroup(std::move(blocks), gadget);
}

}  // namespace absorb
