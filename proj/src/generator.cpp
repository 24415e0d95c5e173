#include "activetime/generator.hpp"

#include <limits>
#include <random>

namespace activetime {

namespace {

// Uniform draw from [0, n) without modulo bias.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % n;
}

}  // namespace

Instance generate_instance(int job_count, int horizon, int batch_size, std::uint64_t seed) {
  if (job_count < 0) throw std::invalid_argument("job count must be >= 0");
  if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
  if (batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
  if (job_count > 0 && horizon == 0)
    throw std::invalid_argument("cannot place jobs on an empty horizon");

  std::mt19937_64 rng(seed);
  Instance instance;
  instance.batch_size = batch_size;
  instance.horizon = horizon;
  for (int j = 0; j < job_count; ++j) {
    Job job;
    job.id = "j" + std::to_string(j);
    job.release = static_cast<int>(bounded(rng, horizon));
    job.deadline = job.release + static_cast<int>(bounded(rng, horizon - job.release));
    job.processing = 1 + static_cast<int>(bounded(rng, job.window_size()));
    instance.jobs.push_back(std::move(job));
  }
  return instance;
}

}  // namespace activetime
