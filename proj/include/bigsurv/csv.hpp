#ifndef BIGSURV_CSV_HPP
#define BIGSURV_CSV_HPP

#include <optional>
#include <string>

#include "bigsurv/types.hpp"

namespace bigsurv {

// CSV schemas (UTF-8, header row required):
//   population:         id,x1,...,xp,y
//   big sample:         id,x1,...,xp,y     (population size N passed separately)
//   probability sample: id,x1,...,xp,d,delta[,y]
// Malformed input raises ParseError naming the offending line.

FinitePopulation load_population_csv(const std::string& path);
BigDataSample load_big_csv(const std::string& path,
                           std::optional<std::uint64_t> population_size);
ProbabilitySample load_probability_csv(const std::string& path);

void write_population_csv(const std::string& path, const FinitePopulation& pop);
void write_big_csv(const std::string& path, const BigDataSample& big);
void write_probability_csv(const std::string& path,
                           const ProbabilitySample& sample);

}  // namespace bigsurv

#endif
