#include "indel/vt_codes.hpp"

#include <algorithm>
#include <bit>

namespace indel {

namespace {

void require_binary(const Word& w, const char* what) {
  if (w.alphabet() != 2) throw std::domain_error(std::string(what) + ": binary words only");
}

std::size_t weight(const Word& w) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), Symbol{1})); }

template <class Pred>
std::vector<Word> sweep(std::size_t n, Pred&& keep) {
  if (n > kMaxEnumerableLength) throw std::domain_error("code too long to enumerate");
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    Word w = Word::from_index(i, n, 2);
    if (keep(w)) out.push_back(std::move(w));
  }
  return out;
}

Word random_word(std::size_t n, unsigned q, Rng& rng) {
  std::vector<Symbol> s(n);
  if (q == 2) {
    for (std::size_t i = 0; i < n; i += 64) {
      std::uint64_t bits = rng.next();
      for (std::size_t k = i; k < std::min(n, i + 64); ++k, bits >>= 1) s[k] = static_cast<Symbol>(bits & 1);
    }
  } else {
    for (auto& v : s) v = static_cast<Symbol>(rng.below(q));
  }
  return Word(std::move(s), q);
}

}  // namespace

std::size_t svt_default_modulus(std::size_t n) {
  const std::size_t lg = n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
  return std::clamp<std::size_t>(lg + 2, 2, n + 1);
}

std::size_t SvtParams::modulus() const { return P == 0 ? svt_default_modulus(n) : P; }

std::uint64_t vt_checksum(const Word& x) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i + 1) * x[i];
  return s;
}

bool vt_is_member(const Word& x, const VtParams& params) {
  require_binary(x, "vt_is_member");
  if (x.size() != params.n) throw std::domain_error("vt_is_member: length mismatch");
  return vt_checksum(x) % (params.n + 1) == params.a % (params.n + 1);
}

Word vt_decode_1del(const Word& y, const VtParams& params) {
  require_binary(y, "vt_decode_1del");
  const std::size_t n = params.n;
  if (n == 0 || y.size() != n - 1) throw std::domain_error("vt_decode_1del: expected length n - 1");
  const std::size_t m = n + 1;
  const std::size_t w = weight(y);
  const std::size_t delta = (params.a % m + m - vt_checksum(y) % m) % m;

  if (delta <= w) {
    // a 0 with `delta` ones to its right
    std::size_t ones = 0, pos = y.size();
    while (ones < delta) ones += y[--pos];
    return y.with_inserted(pos, 0);
  }
  // a 1 with `delta - w - 1` zeros to its left
  const std::size_t zeros_left = delta - w - 1;
  std::size_t zeros = 0, pos = 0;
  while (zeros < zeros_left) zeros += (y[pos++] == 0);
  return y.with_inserted(pos, 1);
}

bool svt_is_member(const Word& x, const SvtParams& params) {
  require_binary(x, "svt_is_member");
  if (x.size() != params.n) throw std::domain_error("svt_is_member: length mismatch");
  const std::size_t P = params.modulus();
  return vt_checksum(x) % P == params.a % P && weight(x) % 2 == params.b % 2;
}

Word svt_decode_1del(const Word& y, const SvtParams& params, std::size_t window_start) {
  require_binary(y, "svt_decode_1del");
  const std::size_t n = params.n;
  if (n == 0 || y.size() != n - 1) throw std::domain_error("svt_decode_1del: expected length n - 1");
  const std::size_t P = params.modulus();
  const Symbol bit = static_cast<Symbol>((params.b + weight(y)) % 2);
  const std::size_t target = (params.a % P + P - vt_checksum(y) % P) % P;

  // ones_from[j]: ones in y[j..]
  std::vector<std::size_t> ones_from(y.size() + 1, 0);
  for (std::size_t j = y.size(); j-- > 0;) ones_from[j] = ones_from[j + 1] + y[j];

  const std::size_t stop = std::min(window_start + P - 1, n);
  for (std::size_t j = window_start; j < stop; ++j) {
    // inserting `bit` at index j adds bit*(j+1) and shifts every later one
    const std::size_t gain = bit * (j + 1) + ones_from[j];
    if (gain % P == target) return y.with_inserted(j, bit);
  }
  throw DecodeFailure("svt_decode_1del: no codeword consistent with the window");
}

std::vector<Word> enumerate_vt(const VtParams& params) {
  return sweep(params.n, [&](const Word& w) { return vt_is_member(w, params); });
}

std::vector<Word> enumerate_svt(const SvtParams& params) {
  return sweep(params.n, [&](const Word& w) { return svt_is_member(w, params); });
}

std::string to_string(CodeKind k) {
  switch (k) {
    case CodeKind::All: return "all";
    case CodeKind::Vt: return "vt";
    case CodeKind::Svt: return "svt";
  }
  return "?";
}

CodeKind parse_code_kind(const std::string& s) {
  if (s == "all") return CodeKind::All;
  if (s == "vt") return CodeKind::Vt;
  if (s == "svt") return CodeKind::Svt;
  throw std::invalid_argument("unknown code: " + s);
}

Code Code::all(std::size_t n, unsigned q) {
  Code c;
  c.kind_ = CodeKind::All;
  c.n_ = n;
  c.q_ = q;
  return c;
}

Code Code::vt(const VtParams& p) {
  if (p.a > p.n) throw std::invalid_argument("VT residue must lie in [0, n]");
  Code c;
  c.kind_ = CodeKind::Vt;
  c.n_ = p.n;
  c.vt_ = p;
  return c;
}

Code Code::svt(const SvtParams& p) {
  const std::size_t P = p.modulus();
  if (P < 2 || P > p.n + 1) throw std::invalid_argument("SVT modulus must lie in [2, n + 1]");
  if (p.a >= P) throw std::invalid_argument("SVT residue must lie in [0, P)");
  if (p.b > 1) throw std::invalid_argument("SVT parity must be 0 or 1");
  Code c;
  c.kind_ = CodeKind::Svt;
  c.n_ = p.n;
  c.svt_ = p;
  c.svt_.P = P;
  return c;
}

bool Code::contains(const Word& w) const {
  if (w.size() != n_ || w.alphabet() != q_) return false;
  switch (kind_) {
    case CodeKind::All: return true;
    case CodeKind::Vt: return vt_is_member(w, vt_);
    case CodeKind::Svt: return svt_is_member(w, svt_);
  }
  return false;
}

Word Code::sample(Rng& rng) const {
  for (;;) {
    Word w = random_word(n_, q_, rng);
    if (contains(w)) return w;
  }
}

std::vector<Word> Code::enumerate() const {
  if (kind_ == CodeKind::All && q_ != 2) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      total *= q_;
      if (total > (std::uint64_t{1} << kMaxEnumerableLength)) throw std::domain_error("code too large to enumerate");
    }
    std::vector<Word> out;
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(Word::from_index(i, n_, q_));
    return out;
  }
  return sweep(n_, [&](const Word& w) { return contains(w); });
}

std::string Code::describe() const {
  switch (kind_) {
    case CodeKind::All: return "all";
    case CodeKind::Vt: return "vt(a=" + std::to_string(vt_.a) + ")";
    case CodeKind::Svt:
      return "svt(a=" + std::to_string(svt_.a) + ",P=" + std::to_string(svt_.P) + ",b=" + std::to_string(svt_.b) + ")";
  }
  return "?";
}

}  // namespace indel
