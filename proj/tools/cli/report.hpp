#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace warpcurv::cli {

// %.17g with '.' as decimal separator. Both zeros print as "0"; non-finite
// values print as nan, inf or -inf.
std::string format_real(double x);

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

// Worker count: WARPCURV_THREADS if set (must be a positive integer), else the
// hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers. If any call
/// throws, the exception from the smallest index is rethrown after all
/// workers finish.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

} // namespace warpcurv::cli
