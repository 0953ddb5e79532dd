#include "masseyx/reproduce.hpp"

#include <map>
#include <stdexcept>

#include "masseyx/access.hpp"
#include "masseyx/catalog.hpp"
#include "masseyx/enumerator.hpp"

namespace masseyx {

namespace reference {

const std::string_view kHammingBiweight =
    "x_3^8 + 14x_2^4x_3^4 + x_2^8 + 14x_3^4x_1^4 + 14x_2^4x_1^4 + x_1^8 + 168x_0^2x_1^2x_2^2x_3^2"
    " + 14x_3^4x_0^4 + 14x_2^4x_0^4 + 14x_1^4x_0^4 + x_0^8";

const std::string_view kHammingZ = "4x_1^3x_2^3 + 12x_0^2x_1x_2x_3^2";

const std::string_view kGolayZ =
    "6160x_0^{12}x_1^3x_2^3x_3^4 + 22176x_0^{10}x_1^5x_2^5x_3^2"
    " + 7392x_0^{10}x_1^5x_2x_3^6 + 7392x_0^{10}x_1x_2^5x_3^6"
    " + 2640x_0^8x_1^7x_2^7 + 73920x_0^8x_1^7x_2^3x_3^4"
    " + 73920x_0^8x_1^3x_2^7x_3^4 + 36960x_0^8x_1^3x_2^3x_3^8"
    " + 36960x_0^6x_1^9x_2^5x_3^2 + 12320x_0^6x_1^9x_2x_3^6"
    " + 36960x_0^6x_1^5x_2^9x_3^2 + 266112x_0^6x_1^5x_2^5x_3^6"
    " + 7392x_0^6x_1^5x_2x_3^{10} + 12320x_0^6x_1x_2^9x_3^6"
    " + 7392x_0^6x_1x_2^5x_3^{10} + 18480x_0^4x_1^{11}x_2^3x_3^4"
    " + 147840x_0^4x_1^7x_2^7x_3^4 + 73920x_0^4x_1^7x_2^3x_3^8"
    " + 18480x_0^4x_1^3x_2^{11}x_3^4 + 73920x_0^4x_1^3x_2^7x_3^8"
    " + 6160x_0^4x_1^3x_2^3x_3^{12} + 36960x_0^2x_1^9x_2^5x_3^6"
    " + 36960x_0^2x_1^5x_2^9x_3^6 + 22176x_0^2x_1^5x_2^5x_3^{10} + 176x_1^{15}x_2^7"
    " + 672x_1^{11}x_2^{11} + 176x_1^7x_2^{15} + 2640x_1^7x_2^7x_3^8";

}  // namespace reference

namespace {

using Histogram = std::map<std::size_t, std::uint64_t>;

nlohmann::json histogram_json(const Histogram& h) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [size, count] : h) j[std::to_string(size)] = count;
  return j;
}

ReproductionResult access_check(std::string target, const SchemeInstance& s, const Histogram& expected,
                                unsigned threads) {
  AccessOptions opts;
  opts.threads = threads;
  const AccessReport r = enumerate_access_structure(s, opts);
  ReproductionResult out{std::move(target), r.histogram == expected, {}};
  out.details["histogram"] = histogram_json(r.histogram);
  out.details["expected"] = histogram_json(expected);
  return out;
}

ReproductionResult z_check(std::string target, std::string_view code, std::string_view expected_z,
                           std::size_t m, std::uint64_t expected_count, unsigned threads) {
  const SchemeInstance s(load(code).code, 2);
  const SparseEnumerator z = secret_coefficient(s, kDefaultCap, threads);
  const SparseEnumerator want = parse_polynomial(expected_z, 2);
  const std::size_t d_perp = min_distance(dual(s.code()));
  const CountBound b = count_bound(z, m, d_perp);
  ReproductionResult out{std::move(target), false, {}};
  out.details["terms"] = z.size();
  out.details["z_matches"] = z == want;
  out.details["m"] = m;
  out.details["count_bound"] = b.bound.str();
  out.details["exact"] = b.exact;
  out.pass = z == want && b.bound == expected_count && b.exact;
  return out;
}

ReproductionResult exact_count_check(std::string target, std::size_t m, std::uint64_t expected, unsigned threads) {
  const SchemeInstance s(load("golay24").code, 2);
  const ExactCount c = verify_exact_count(s, m, kDefaultCap, threads);
  ReproductionResult out{std::move(target), c.count == expected && c.certified, {}};
  out.details["m"] = m;
  out.details["count"] = c.count;
  out.details["certified"] = c.certified;
  out.details["tuples"] = c.tuples;
  out.details["expected"] = expected;
  return out;
}

}  // namespace

std::vector<std::string> reproduction_targets() {
  return {"example1", "example2", "hamming-z", "golay-z", "golay-m10", "golay-m12"};
}

ReproductionResult run_reproduction(std::string_view target, unsigned threads) {
  if (target == "example1")
    return access_check("example1", SchemeInstance(dual(load("c1_ternary").code), 2), {{5, 4}, {6, 1}}, threads);
  if (target == "example2")
    return access_check("example2", SchemeInstance(load("hamming8").code, 3), {{4, 4}, {5, 1}}, threads);
  if (target == "hamming-z") {
    ReproductionResult out = z_check("hamming-z", "hamming8", reference::kHammingZ, 4, 12, threads);
    const LinearCode h = load("hamming8").code;
    const std::vector<JweArgument> args{JweArgument::code(h), JweArgument::code(h)};
    const bool biweight_ok =
        joint_weight_enumerator(args, kDefaultCap, threads) == parse_polynomial(reference::kHammingBiweight, 2);
    out.details["biweight_matches"] = biweight_ok;
    out.pass = out.pass && biweight_ok;
    return out;
  }
  if (target == "golay-z") return z_check("golay-z", "golay24", reference::kGolayZ, 10, 6160, threads);
  if (target == "golay-m10") {
    ReproductionResult out = z_check("golay-m10", "golay24", reference::kGolayZ, 10, 6160, threads);
    const ReproductionResult exact = exact_count_check("golay-m10", 10, 6160, threads);
    out.details["enumerated"] = exact.details;
    out.pass = out.pass && exact.pass;
    return out;
  }
  if (target == "golay-m12") return exact_count_check("golay-m12", 12, 36960, threads);
  throw std::invalid_argument("unknown reproduction target '" + std::string(target) + "'");
}

}  // namespace masseyx
