#include "powclass/vset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace powclass {

namespace {

std::string vector_to_string(const Vector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

}  // namespace

VSet::VSet(GroundSet ground, std::size_t n, std::vector<Vector> vectors,
           std::string provenance)
    : ground_(std::move(ground)),
      n_(n),
      vectors_(std::move(vectors)),
      provenance_(std::move(provenance)) {
  if (n_ == 0) throw InputError("V: vector length n must be >= 1");
  if (vectors_.empty())
    throw InputError("V must be nonempty (|V| = s >= 1), got no vectors" +
                     (provenance_.empty() ? "" : " from " + provenance_));
  for (const Vector& v : vectors_) {
    if (v.size() != n_)
      throw InputError("V: vector " + vector_to_string(v) + " has length " +
                       std::to_string(v.size()) + ", expected n = " +
                       std::to_string(n_));
    for (Label l : v)
      if (!ground_.contains(l))
        throw InputError("V: vector " + vector_to_string(v) +
                         " uses label " + std::to_string(l) +
                         " outside the ground set");
  }
  std::sort(vectors_.begin(), vectors_.end());
  for (std::size_t i = 1; i < vectors_.size(); ++i)
    if (vectors_[i] == vectors_[i - 1])
      throw InputError("V: duplicate vector " +
                       vector_to_string(vectors_[i]));
  if (auto w = check_sn_invariant(vectors_)) {
    throw InputError("V is not S_n-invariant: swapping coordinates " +
                     std::to_string(w->swap_pos) + "," +
                     std::to_string(w->swap_pos + 1) + " of " +
                     vector_to_string(w->vector) + " gives " +
                     vector_to_string(w->image) + ", which is missing");
  }
}

bool VSet::contains(const Vector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

std::optional<InvarianceWitness> check_sn_invariant(
    const std::vector<Vector>& vectors) {
  std::vector<Vector> sorted = vectors;
  std::sort(sorted.begin(), sorted.end());
  for (const Vector& v : sorted) {
    // Adjacent transpositions generate S_n.
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1]) continue;
      Vector image = v;
      std::swap(image[i], image[i + 1]);
      if (!std::binary_search(sorted.begin(), sorted.end(), image))
        return InvarianceWitness{v, i, image};
    }
  }
  return std::nullopt;
}

std::optional<InjectivityWitness> check_f_injective(const VSet& v) {
  std::map<Vector, Vector> by_content;  // sorted content -> first member
  for (const Vector& r : v.vectors()) {
    Vector content = r;
    std::sort(content.begin(), content.end());
    auto [pos, inserted] = by_content.emplace(std::move(content), r);
    if (!inserted) return InjectivityWitness{pos->second, r};
  }
  return std::nullopt;
}

std::optional<ClosureWitness> check_inversion_closed(const VSet& v) {
  for (const Vector& r : v.vectors())
    if (!v.contains(vector_inverse(r, v.ground())))
      return ClosureWitness{r};
  return std::nullopt;
}

VSet gen_diagonal(std::size_t s, std::size_t n, GroundSet ground) {
  if (s == 0) throw InputError("gen_diagonal: s must be >= 1");
  if (ground.size() < s)
    throw InputError("gen_diagonal: ground set has " +
                     std::to_string(ground.size()) + " labels, need >= " +
                     std::to_string(s));
  std::vector<Vector> vectors;
  vectors.reserve(s);
  for (std::size_t i = 0; i < s; ++i)
    vectors.emplace_back(n, ground.labels()[i]);
  std::string prov = "diag:s=" + std::to_string(s) + ",n=" + std::to_string(n);
  if (ground.group_desc().rfind("cyclic:", 0) == 0)
    prov += ",q=" + ground.group_desc().substr(7);
  return VSet(std::move(ground), n, std::move(vectors), prov);
}

VSet gen_constant_weight(std::size_t n, std::uint64_t h) {
  if (n == 0) throw InputError("gen_constant_weight: n must be >= 1");
  if (h > n)
    throw InputError("gen_constant_weight: weight h = " + std::to_string(h) +
                     " exceeds n = " + std::to_string(n));
  std::vector<Vector> vectors;
  Vector v(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (n - pos < left) return;
    if (pos == n) {
      vectors.push_back(v);
      return;
    }
    v[pos] = 0;
    self(self, pos + 1, left);
    if (left > 0) {
      v[pos] = 1;
      self(self, pos + 1, left - 1);
      v[pos] = 0;
    }
  };
  rec(rec, 0, h);
  return VSet(GroundSet::cyclic(2), n, std::move(vectors),
              "weight:n=" + std::to_string(n) + ",h=" + std::to_string(h));
}

VSet gen_composition(std::uint64_t q, const std::vector<std::uint64_t>& h) {
  if (q == 0) throw InputError("gen_composition: q must be >= 1");
  if (h.size() != q)
    throw InputError("gen_composition: expected " + std::to_string(q) +
                     " counts, got " + std::to_string(h.size()));
  std::uint64_t n = 0;
  for (std::uint64_t c : h) n += c;
  if (n == 0)
    throw InputError("gen_composition: counts must sum to a positive n");
  Vector word;
  word.reserve(n);
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t k = 0; k < h[a]; ++k)
      word.push_back(static_cast<Label>(a));
  std::vector<Vector> vectors;
  do {
    vectors.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  std::string prov = "comp:q=" + std::to_string(q) + ",h=";
  for (std::size_t a = 0; a < h.size(); ++a) {
    if (a) prov += ",";
    prov += std::to_string(h[a]);
  }
  return VSet(GroundSet::cyclic(q), static_cast<std::size_t>(n),
              std::move(vectors), prov);
}

VSet gen_squares(std::size_t n, std::uint64_t h, bool attach_negation) {
  if (n == 0) throw InputError("gen_squares: n must be >= 1");
  Label bound = 0;
  while (static_cast<std::uint64_t>((bound + 1)) * (bound + 1) <= h) ++bound;
  std::vector<Label> labels;
  for (Label x = -bound; x <= bound; ++x) labels.push_back(x);
  std::vector<Vector> vectors;
  Vector v(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos == n) {
      if (left == 0) vectors.push_back(v);
      return;
    }
    for (Label x = -bound; x <= bound; ++x) {
      const std::uint64_t sq = static_cast<std::uint64_t>(x) * x;
      if (sq > left) continue;
      v[pos] = x;
      self(self, pos + 1, left - sq);
    }
    v[pos] = 0;
  };
  rec(rec, 0, h);
  if (vectors.empty())
    throw InputError("gen_squares: h = " + std::to_string(h) +
                     " has no representation as a sum of " +
                     std::to_string(n) + " squares; V would be empty");
  GroundSet ground = attach_negation ? GroundSet::with_negation(labels)
                                     : GroundSet::plain(labels);
  std::string prov = "squares:n=" + std::to_string(n) +
                     ",h=" + std::to_string(h) +
                     (attach_negation ? ",group" : "");
  return VSet(std::move(ground), n, std::move(vectors), prov);
}

namespace {

GroundSet ground_from_json(const nlohmann::json& doc) {
  if (!doc.contains("labels") || !doc["labels"].is_array())
    throw InputError("V-set file: missing or invalid \"labels\" array");
  std::vector<Label> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_number_integer())
      throw InputError("V-set file: labels must be integers");
    labels.push_back(l.get<Label>());
  }
  if (!doc.contains("group")) return GroundSet::plain(std::move(labels));
  const auto& g = doc["group"];
  if (g.is_string()) {
    const std::string spec = g.get<std::string>();
    if (spec == "negation") return GroundSet::with_negation(std::move(labels));
    if (spec.rfind("cyclic:", 0) == 0) {
      std::uint64_t q = 0;
      try {
        q = std::stoull(spec.substr(7));
      } catch (const std::exception&) {
        throw InputError("V-set file: bad group spec \"" + spec + "\"");
      }
      GroundSet ground = GroundSet::cyclic(q);
      if (ground.labels() != labels)
        throw InputError(
            "V-set file: cyclic:" + std::to_string(q) +
            " requires labels 0..q-1 matching the \"labels\" array");
      return ground;
    }
    throw InputError("V-set file: unknown group spec \"" + spec + "\"");
  }
  if (g.is_object() && g.contains("table")) {
    std::vector<std::vector<Label>> table;
    for (const auto& row : g["table"]) {
      std::vector<Label> r;
      for (const auto& e : row) {
        if (!e.is_number_integer())
          throw InputError("V-set file: group table entries must be integers");
        r.push_back(e.get<Label>());
      }
      table.push_back(std::move(r));
    }
    return GroundSet::with_table(std::move(labels), table);
  }
  throw InputError("V-set file: \"group\" must be a spec string or a table");
}

}  // namespace

VSet load_vset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open V-set file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("V-set file " + path + ": " + e.what());
  }
  if (!doc.contains("n") || !doc["n"].is_number_unsigned())
    throw InputError("V-set file: missing or invalid \"n\"");
  const auto n = doc["n"].get<std::size_t>();
  GroundSet ground = ground_from_json(doc);
  if (!doc.contains("vectors") || !doc["vectors"].is_array())
    throw InputError("V-set file: missing \"vectors\" array");
  std::vector<Vector> vectors;
  for (const auto& row : doc["vectors"]) {
    Vector v;
    for (const auto& e : row) {
      if (!e.is_number_integer())
        throw InputError("V-set file: vector entries must be integers");
      v.push_back(e.get<Label>());
    }
    vectors.push_back(std::move(v));
  }
  return VSet(std::move(ground), n, std::move(vectors), "file:" + path);
}

void save_vset(const VSet& v, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["n"] = v.n();
  doc["labels"] = v.ground().labels();
  const std::string& desc = v.ground().group_desc();
  if (desc != "none") {
    if (desc == "table") {
      std::vector<std::vector<Label>> table;
      for (Label a : v.ground().labels()) {
        std::vector<Label> row;
        for (Label b : v.ground().labels()) row.push_back(v.ground().op(a, b));
        table.push_back(std::move(row));
      }
      doc["group"] = nlohmann::ordered_json{{"table", table}};
    } else {
      doc["group"] = desc;
    }
  }
  doc["vectors"] = v.vectors();
  std::ofstream out(path);
  if (!out) throw InputError("cannot write V-set file: " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace powclass
