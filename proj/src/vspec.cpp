#include "powclass/vspec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace powclass {

namespace {

// Cursor over "key=value,key=value,..." with position-annotated failures.
class SpecCursor {
 public:
  SpecCursor(const std::string& full, std::size_t offset)
      : full_(full), pos_(offset) {}

  bool done() const { return pos_ >= full_.size(); }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("vspec: " + what + " at position " +
                     std::to_string(pos_) + " in \"" + full_ + "\"");
  }

  void expect(char c) {
    if (done() || full_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (!done() && full_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < full_.size() && full_[pos_] != '=' && full_[pos_] != ',')
      ++pos_;
    return full_.substr(start, pos_ - start);
  }

  std::uint64_t number() {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(full_.data() + pos_,
                                     full_.data() + full_.size(), value);
    if (ec != std::errc() || ptr == full_.data() + pos_)
      fail("expected an unsigned integer");
    pos_ = static_cast<std::size_t>(ptr - full_.data());
    return value;
  }

  std::uint64_t key_number(const std::string& key) {
    const std::size_t start = pos_;
    std::string got = word();
    if (got != key) {
      pos_ = start;
      fail("expected \"" + key + "=\", got \"" + got + "\"");
    }
    expect('=');
    return number();
  }

  void end() {
    if (!done()) fail("unexpected trailing input");
  }

 private:
  const std::string& full_;
  std::size_t pos_;
};

}  // namespace

std::shared_ptr<const VSet> parse_vspec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw InputError(
        "vspec: missing ':' at position 0 in \"" + spec +
        "\"; expected diag:, weight:, comp:, squares: or file:");
  const std::string head = spec.substr(0, colon);

  if (head == "file")
    return std::make_shared<const VSet>(load_vset(spec.substr(colon + 1)));

  SpecCursor cur(spec, colon + 1);
  if (head == "diag") {
    const std::uint64_t s = cur.key_number("s");
    cur.expect(',');
    const std::uint64_t n = cur.key_number("n");
    if (cur.accept(',')) {
      const std::uint64_t q = cur.key_number("q");
      cur.end();
      if (q < s)
        throw InputError("vspec: diag needs q >= s, got q=" +
                         std::to_string(q) + ", s=" + std::to_string(s));
      return std::make_shared<const VSet>(
          gen_diagonal(s, n, GroundSet::cyclic(q)));
    }
    cur.end();
    std::vector<Label> labels;
    for (std::uint64_t i = 0; i < s; ++i)
      labels.push_back(static_cast<Label>(i));
    return std::make_shared<const VSet>(
        gen_diagonal(s, n, GroundSet::plain(std::move(labels))));
  }
  if (head == "weight") {
    const std::uint64_t n = cur.key_number("n");
    cur.expect(',');
    const std::uint64_t h = cur.key_number("h");
    cur.end();
    return std::make_shared<const VSet>(gen_constant_weight(n, h));
  }
  if (head == "comp") {
    const std::uint64_t q = cur.key_number("q");
    cur.expect(',');
    std::vector<std::uint64_t> h;
    h.push_back(cur.key_number("h"));
    while (cur.accept(',')) h.push_back(cur.number());
    cur.end();
    return std::make_shared<const VSet>(gen_composition(q, h));
  }
  if (head == "squares") {
    const std::uint64_t n = cur.key_number("n");
    cur.expect(',');
    const std::uint64_t h = cur.key_number("h");
    bool group = false;
    if (cur.accept(',')) {
      const std::string flag = cur.word();
      if (flag != "group")
        cur.fail("unknown flag \"" + flag + "\" (only \"group\")");
      group = true;
    }
    cur.end();
    return std::make_shared<const VSet>(gen_squares(n, h, group));
  }
  throw InputError("vspec: unknown generator \"" + head +
                   "\" at position 0 in \"" + spec + "\"");
}

WeightSpec parse_weight_spec(const std::string& spec) {
  WeightSpec w;
  if (spec == "unit") {
    w.kind = WeightSpec::Kind::Unit;
    w.text = "unit";
    return w;
  }
  if (spec.rfind("rank_eq:", 0) == 0) {
    SpecCursor cur(spec, 8);
    w.kind = WeightSpec::Kind::RankEq;
    w.p = cur.key_number("p");
    cur.expect(',');
    w.target_rank = cur.key_number("r");
    cur.end();
    if (!is_prime(w.p))
      throw InputError("weight rank_eq: p = " + std::to_string(w.p) +
                       " is not prime");
    w.text = "rank_eq:p=" + std::to_string(w.p) +
             ",r=" + std::to_string(w.target_rank);
    return w;
  }
  if (spec.rfind("table:", 0) == 0) {
    const std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open weight table: " + path);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw InputError("weight table " + path + ": " + e.what());
    }
    if (!doc.is_array())
      throw InputError("weight table must be a JSON array of entries");
    w.kind = WeightSpec::Kind::UserTable;
    for (const auto& entry : doc) {
      if (!entry.contains("matrix") || !entry.contains("value"))
        throw InputError("weight table entries need \"matrix\" and \"value\"");
      std::vector<Label> flat;
      for (const auto& row : entry["matrix"])
        for (const auto& e : row) flat.push_back(e.get<Label>());
      const std::string value = entry["value"].get<std::string>();
      BigRational r;
      const std::size_t slash = value.find('/');
      try {
        if (slash == std::string::npos) {
          r = BigRational(BigCount(value));
        } else {
          r = BigRational(BigCount(value.substr(0, slash)),
                          BigCount(value.substr(slash + 1)));
        }
      } catch (const std::exception&) {
        throw InputError("weight table: bad rational \"" + value + "\"");
      }
      w.table[flat] = r;
    }
    w.text = spec;
    return w;
  }
  throw InputError("unknown weight spec \"" + spec +
                   "\"; expected unit, rank_eq:p=..,r=.. or table:<path>");
}

MatrixA parse_matrix_literal(const std::string& text,
                             const std::shared_ptr<const VSet>& v) {
  std::vector<Label> entries;
  std::size_t rows = 0;
  std::istringstream row_stream(text);
  std::string row;
  while (std::getline(row_stream, row, ';')) {
    std::istringstream entry_stream(row);
    std::string tok;
    std::size_t count = 0;
    while (entry_stream >> tok) {
      try {
        entries.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw InputError("matrix literal: bad entry \"" + tok + "\" in \"" +
                         text + "\"");
      }
      ++count;
    }
    if (count != v->n())
      throw InputError("matrix literal: row " + std::to_string(rows) +
                       " has " + std::to_string(count) + " entries, need n = " +
                       std::to_string(v->n()));
    ++rows;
  }
  if (rows == 0) throw InputError("matrix literal is empty");
  return MatrixA(v, std::move(entries), rows);
}

}  // namespace powclass
