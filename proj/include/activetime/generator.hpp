#ifndef ACTIVETIME_GENERATOR_HPP
#define ACTIVETIME_GENERATOR_HPP

#include <cstdint>

#include "activetime/model.hpp"

namespace activetime {

// Seeded random instance: per job, release uniform in [0, horizon-1],
// deadline uniform in [release, horizon-1], processing uniform in
// [1, window size]. mt19937_64 with rejection sampling, so one seed maps
// to one byte sequence on every platform.
Instance generate_instance(int job_count, int horizon, int batch_size, std::uint64_t seed);

}  // namespace activetime

#endif  // ACTIVETIME_GENERATOR_HPP
