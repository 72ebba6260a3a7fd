#include "ltree/checks.hpp"

#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>

namespace ltree {

namespace {

constexpr std::uint64_t kSpread = 12;

class Tally {
 public:
  Tally(std::initializer_list<const char*> ids, std::size_t samples) {
    for (const char* id : ids) report_.findings.push_back({id, true, samples, ""});
  }

  void fail(std::string_view id, std::size_t sample, const std::string& detail) {
    for (auto& f : report_.findings)
      if (f.axiom == id && f.passed) {
        f.passed = false;
        f.sample = sample;
        f.detail = detail;
      }
  }
  void expect(bool ok, std::string_view id, std::size_t sample, const std::string& detail) {
    if (!ok) fail(id, sample, detail);
  }

  CheckReport take() { return std::move(report_); }

 private:
  CheckReport report_;
};

BigInt uniform(ElementSampler& sampler, const BigInt& lo, const BigInt& hi) {
  const BigInt span = hi - lo + 1;
  if (span <= 0) return lo;
  if (span <= BigInt(std::numeric_limits<std::uint64_t>::max()))
    return lo + sampler.next(span.convert_to<std::uint64_t>());
  return lo + BigInt(sampler.next(0)) % span;
}

std::string describe(std::initializer_list<const TreePoint*> points) {
  std::string out;
  const char* names[] = {"p", "q", "r", "s"};
  std::size_t i = 0;
  for (const auto* p : points) {
    if (!out.empty()) out += ' ';
    out += std::string(names[i++]) + "=\"" + format_point(*p) + "\"";
  }
  return out;
}

}  // namespace

TreePoint random_point(ElementSampler& sampler) {
  GroupElem g = sampler.element();
  const LambdaElem length = g.length();
  const std::size_t rank = length.rank();
  switch (sampler.next(4)) {
    case 0: {
      LambdaElem alpha = sampler.next(2) == 0 ? LambdaElem::zero(rank) : length;
      return {std::move(alpha), std::move(g)};
    }
    case 1: {
      LambdaElem alpha = c_value(g, sampler.element());
      return {std::move(alpha), std::move(g)};
    }
    default:
      break;
  }
  const BigInt top = rank >= 2 ? length[1] : BigInt(0);
  const BigInt level = uniform(sampler, 0, top);
  const BigInt spread(kSpread);
  BigInt low;
  if (top == 0)
    low = uniform(sampler, 0, length[0]);
  else if (level == 0)
    low = uniform(sampler, 0, spread);
  else if (level == top)
    low = uniform(sampler, length[0] - spread, length[0]);
  else
    low = uniform(sampler, -spread, spread);
  return {LambdaElem::from_parts(rank, low, level), std::move(g)};
}

TreePoint other_representative(ElementSampler& sampler, const TreePoint& p) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    GroupElem other = multiply(p.elem, sampler.element(1));
    if (p.alpha <= c_value(p.elem, other)) return {p.alpha, std::move(other)};
  }
  return p;
}

CheckReport check_metric(const GroupDef& group, std::size_t samples, std::uint64_t seed) {
  Tally tally({"M1", "M2", "M3", "M4", "WD", "H0", "MED", "XI", "C"}, samples);
  ElementSampler sampler(group, seed);
  const LambdaElem zero = LambdaElem::zero(group.rank());
  const LambdaElem one = LambdaElem::one(group.rank());
  for (std::size_t k = 0; k < samples; ++k) {
    std::string where;
    try {
      const TreePoint p = random_point(sampler), q = random_point(sampler);
      const TreePoint r = random_point(sampler), s = random_point(sampler);
      const TreePoint p2 = other_representative(sampler, p), q2 = other_representative(sampler, q);
      where = describe({&p, &q, &r, &s});

      const LambdaElem pq = distance(p, q), qp = distance(q, p);
      const LambdaElem pr = distance(p, r), qr = distance(q, r);
      tally.expect(pq >= zero && pr >= zero && qr >= zero, "M1", k, where);
      tally.expect((pq == zero) == point_eq(p, q), "M2", k, where);
      tally.expect(distance(p, p).is_zero() && point_eq(p, p), "M2", k, where);
      tally.expect(pq == qp, "M3", k, where);
      tally.expect(pq <= pr + qr && pr <= pq + qr && qr <= pq + pr, "M4", k, where);

      tally.expect(point_eq(p, p2) && point_eq(q, q2), "WD", k, where + " representatives differ");
      tally.expect(distance(p2, q2) == pq && distance(p2, q) == pq, "WD", k, where);

      // Overlaps seen from the base point, then Gromov products seen from r.
      tally.expect(is_isosceles(overlap(p, q), overlap(p, s), overlap(q, s)), "H0", k, where);
      const LambdaElem rp = distance(r, p), rq = distance(r, q), rs = distance(r, s);
      const LambdaElem ps = distance(p, s), qs = distance(q, s);
      tally.expect(is_isosceles((rp + rq - pq).half(), (rp + rs - ps).half(), (rq + rs - qs).half()),
                   "H0", k, where);

      const TreePoint m = median(p, q, r);
      tally.expect(distance(p, m) == (pq + pr - qr).half() && distance(q, m) == (pq + qr - pr).half() &&
                       distance(r, m) == (pr + qr - pq).half(),
                   "MED", k, where);
      tally.expect(point_eq(median(q, r, p), m) && point_eq(median(r, p, q), m) &&
                       point_eq(median(p, p, q), p),
                   "MED", k, where);

      if (p.alpha.is_positive()) tally.expect(point_label(p) == point_label(p2), "XI", k, where);
      if (p.alpha.is_positive() && p.alpha < p.elem.length()) {
        const TreePoint next{p.alpha + one, p.elem};
        tally.expect(distance(p, next) == one && *point_label(p) != point_label(next)->inverse(), "XI", k,
                     where);
      }
    } catch (const std::exception& e) {
      tally.fail("C", k, where + " error=\"" + e.what() + "\"");
    }
  }
  return tally.take();
}

CheckReport check_action(const GroupDef& group, std::size_t samples, std::uint64_t seed) {
  Tally tally({"ISO", "COMP", "FREE", "BL", "AX", "C"}, samples);
  ElementSampler sampler(group, seed);
  const bool trivial = group.generators().empty();
  const TreePoint base = base_point(group);
  for (std::size_t k = 0; k < samples; ++k) {
    std::string where;
    try {
      const GroupElem f = trivial ? identity(group) : sampler.nontrivial();
      const GroupElem g = sampler.element();
      const TreePoint p = random_point(sampler), q = random_point(sampler);
      where = "f=\"" + f.expression + "\" g=\"" + g.expression + "\" " + describe({&p, &q});

      const TreePoint fp = act(f, p);
      tally.expect(distance(fp, act(f, q)) == distance(p, q), "ISO", k, where);
      tally.expect(point_eq(act(f, act(g, p)), act(multiply(f, g), p)), "COMP", k, where);
      tally.expect(point_eq(act(identity(group), p), p), "COMP", k, where);
      if (!trivial) tally.expect(!point_eq(fp, p), "FREE", k, where);

      try {
        based_length(group, g);
      } catch (const std::logic_error& e) {
        tally.fail("BL", k, where + " " + e.what());
      }

      if (!trivial) {
        const LambdaElem shift = translation_length(f);
        const LambdaElem moved = distance(p, fp);
        tally.expect(on_axis(f, p) == (moved == shift), "AX", k, where);
        tally.expect(moved >= shift && (moved - shift).half() >= LambdaElem::zero(group.rank()), "AX", k,
                     where);
        const auto decomposition = cyclic_decomposition(f.word);
        tally.expect(on_axis(f, base) == decomposition->conjugator.empty(), "AX", k, where);
      }
    } catch (const std::exception& e) {
      tally.fail("C", k, where + " error=\"" + e.what() + "\"");
    }
  }
  return tally.take();
}

CheckReport run_suite(const GroupDef& group, std::string_view suite, std::size_t samples,
                      std::uint64_t seed) {
  if (suite == "length") return check_length_axioms(group, samples, seed);
  if (suite != "metric" && suite != "action" && suite != "all")
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  if (suite != "all") {
    CheckReport report = check_generators(group);
    report.merge(suite == "metric" ? check_metric(group, samples, seed)
                                   : check_action(group, samples, seed));
    return report;
  }
  CheckReport report = check_length_axioms(group, samples, seed);
  report.merge(check_metric(group, samples, seed));
  report.merge(check_action(group, samples, seed));
  return report;
}

}  // namespace ltree
