#include <algorithm>
#include <future>
#include <ostream>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "hosvd3/cli.hpp"
#include "hosvd3/random.hpp"

namespace hosvd3::cli {
namespace {

struct Shard {
  std::string csv;
  SampleSummary summary;
};

Shard run_shard(const SampleOptions& opts, std::size_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(shard)};
  std::mt19937_64 engine(seq);

  const std::size_t first = shard * kSampleShardSize;
  const std::size_t last = std::min(opts.count, first + kSampleShardSize);
  Shard out;
  for (std::size_t id = first; id < last; ++id) {
    const auto state = random_state(engine);
    const auto c = qubit3::classify(state, opts.classify);
    const auto& s = c.sigma_triple;
    fmt::format_to(std::back_inserter(out.csv), "{},{:.12g},{:.12g},{:.12g},{},{},{}\n", id, s[0], s[1], s[2],
                   qubit3::to_string(c.separability), qubit3::to_string(c.case_tag),
                   qubit3::to_string(c.special));

    auto& sum = out.summary;
    ++sum.count;
    if (!qubit3::polytope_membership(qubit3::polytope_point(c), opts.classify.tol).inside) ++sum.violations;
    for (std::size_t k = 0; k < 3; ++k) {
      sum.min_s[k] = std::min(sum.min_s[k], s[k]);
      sum.max_s[k] = std::max(sum.max_s[k], s[k]);
    }
    if (c.separability == qubit3::Separability::genuine) ++sum.genuine;
    if (c.noncanonical_gauge) ++sum.noncanonical;
  }
  return out;
}

void merge(SampleSummary& into, const SampleSummary& from) {
  into.count += from.count;
  into.violations += from.violations;
  for (std::size_t k = 0; k < 3; ++k) {
    into.min_s[k] = std::min(into.min_s[k], from.min_s[k]);
    into.max_s[k] = std::max(into.max_s[k], from.max_s[k]);
  }
  into.genuine += from.genuine;
  into.noncanonical += from.noncanonical;
}

}  // namespace

SampleSummary write_samples(std::ostream& out, const SampleOptions& opts) {
  if (opts.count == 0) throw InputError("sample count must be at least 1");
  out << fmt::format("# generator=mt19937_64 seeding=seed_seq(seed_lo,seed_hi,shard) shard_size={} "
                     "normal=std::normal_distribution seed={} count={}\n",
                     kSampleShardSize, opts.seed, opts.count);
  out << "id,s1,s2,s3,separability,case,special\n";

  const std::size_t shards = (opts.count + kSampleShardSize - 1) / kSampleShardSize;
  const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());

  SampleSummary total;
  // Shards run in waves of `workers`; each wave is written in shard order.
  for (std::size_t begin = 0; begin < shards; begin += workers) {
    const std::size_t end = std::min(shards, begin + workers);
    std::vector<std::future<Shard>> wave;
    for (std::size_t k = begin; k < end; ++k) {
      wave.push_back(std::async(k + 1 == end ? std::launch::deferred : std::launch::async, run_shard,
                                std::cref(opts), k));
    }
    for (auto& f : wave) {
      const Shard shard = f.get();
      out << shard.csv;
      merge(total, shard.summary);
    }
  }
  return total;
}

}  // namespace hosvd3::cli
