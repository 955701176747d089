#include "grc/ring.hpp"

#include <bit>
#include <cctype>

namespace grc {

RingSpec make_ring_spec(int k) {
  if (k < 0 || k > kMaxRingK)
    throw std::invalid_argument("ring parameter k must be in 0..4, got " + std::to_string(k));
  return RingSpec{k};
}

RingSpec parse_ring_spec(std::string_view text) {
  if (text == "f2" || text == "F2") return RingSpec{0};
  if ((text.size() == 2) && (text[0] == 'r' || text[0] == 'R') && std::isdigit(text[1]))
    return make_ring_spec(text[1] - '0');
  throw std::invalid_argument("unknown ring descriptor '" + std::string(text) + "' (expected f2 or r<k>)");
}

RingValue RingValue::generator(RingSpec spec, int i) {
  if (i < 1 || i > spec.k)
    throw std::invalid_argument("ring generator u" + std::to_string(i) + " not present in this ring");
  return RingValue(spec, static_cast<std::uint16_t>(1u << (1 << (i - 1))));
}

static void require_same_spec(const RingValue& a, const RingValue& b) {
  if (a.spec() != b.spec()) throw std::invalid_argument("ring mismatch");
}

RingValue ring_add(const RingValue& a, const RingValue& b) {
  require_same_spec(a, b);
  return RingValue(a.spec(), static_cast<std::uint16_t>(a.bits() ^ b.bits()));
}

RingValue ring_mul(const RingValue& a, const RingValue& b) {
  require_same_spec(a, b);
  std::uint32_t r = 0;
  for (std::uint32_t x = a.bits(); x; x &= x - 1) {
    const int p = std::countr_zero(x);
    for (std::uint32_t y = b.bits(); y; y &= y - 1) {
      const int q = std::countr_zero(y);
      if ((p & q) == 0) r ^= 1u << (p | q);
    }
  }
  return RingValue(a.spec(), static_cast<std::uint16_t>(r));
}

RingValue ring_inverse(const RingValue& a) {
  if (!a.is_unit()) throw std::invalid_argument("ring element is not a unit");
  const RingValue m(a.spec(), static_cast<std::uint16_t>(a.bits() & ~1u));
  RingValue inv = RingValue::one(a.spec());
  RingValue pow = RingValue::one(a.spec());
  for (int i = 1; i <= a.spec().k; ++i) {
    pow = ring_mul(pow, m);
    if (pow.is_zero()) break;
    inv = ring_add(inv, pow);
  }
  return inv;
}

static std::uint16_t gray_bits(std::uint16_t v, int k) {
  if (k == 0) return v & 1;
  const int half = 1 << (k - 1);
  const std::uint16_t lo = static_cast<std::uint16_t>(v & ((1u << half) - 1));
  const std::uint16_t hi = static_cast<std::uint16_t>(v >> half);
  return static_cast<std::uint16_t>(gray_bits(hi, k - 1) | (gray_bits(static_cast<std::uint16_t>(lo ^ hi), k - 1) << half));
}

std::uint16_t gray_map(const RingValue& a) { return gray_bits(a.bits(), a.spec().k); }

RingValue gray_unmap(RingSpec spec, std::uint16_t image) {
  // gray_bits is an involution up to the linear structure; invert by the
  // reverse recursion: image = (phi(y), phi(x+y)) gives y, then x.
  if (image >> spec.monomials())
    throw std::invalid_argument("gray image out of range");
  if (spec.k == 0) return RingValue(spec, image);
  const int half = 1 << (spec.k - 1);
  const RingSpec sub{spec.k - 1};
  const std::uint16_t lo = static_cast<std::uint16_t>(image & ((1u << half) - 1));
  const std::uint16_t hi = static_cast<std::uint16_t>(image >> half);
  const std::uint16_t y = gray_unmap(sub, lo).bits();
  const std::uint16_t xy = gray_unmap(sub, hi).bits();
  return RingValue(spec, static_cast<std::uint16_t>((xy ^ y) | (y << half)));
}

int lee_weight(const RingValue& a) { return std::popcount(static_cast<std::uint32_t>(gray_map(a))); }

namespace {

struct LiteralParser {
  RingSpec spec;
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("ring literal error at position " + std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) { ++pos; return true; }
    return false;
  }

  // monomial := '0' | '1' | ('u' digit)+
  std::uint16_t monomial() {
    skip_ws();
    if (pos >= text.size()) fail("expected monomial");
    if (text[pos] == '0') { ++pos; return 0; }
    if (text[pos] == '1') { ++pos; return 1; }
    std::uint16_t subset = 0;
    bool any = false;
    while (pos + 1 < text.size() && text[pos] == 'u' &&
           std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      const int i = text[pos + 1] - '0';
      if (i < 1 || i > spec.k) fail("generator u" + std::to_string(i) + " not in ring");
      subset |= static_cast<std::uint16_t>(1u << (i - 1));
      pos += 2;
      any = true;
    }
    if (!any) fail("expected 0, 1 or u<i>");
    return static_cast<std::uint16_t>(1u << subset);
  }

  std::uint16_t sum() {
    std::uint16_t bits = 0;
    for (;;) {
      std::uint16_t m = monomial();
      // cancellation in characteristic 2
      bits ^= m;
      if (!eat('+')) break;
    }
    return bits;
  }

  RingValue parse() {
    skip_ws();
    std::uint16_t bits;
    if (eat('(')) {
      bits = sum();
      if (!eat(')')) fail("expected ')'");
    } else {
      bits = sum();
    }
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return RingValue(spec, bits);
  }
};

}  // namespace

RingValue parse_ring_literal(RingSpec spec, std::string_view text) {
  return LiteralParser{spec, text}.parse();
}

std::string to_string(const RingValue& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int s = 0; s < a.spec().monomials(); ++s) {
    if (!((a.bits() >> s) & 1)) continue;
    if (!out.empty()) out += "+";
    if (s == 0) {
      out += "1";
    } else {
      for (int i = 0; i < a.spec().k; ++i)
        if ((s >> i) & 1) out += "u" + std::to_string(i + 1);
    }
  }
  return out;
}

}  // namespace grc
