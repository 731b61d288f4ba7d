#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace colcrush::kernels {

template <typename Match>
RowIds select_if_parallel(std::uint64_t n, Match match) {
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
  std::vector<RowIds> parts(static_cast<std::size_t>(threads));
  const auto len = static_cast<std::int64_t>(n);
#pragma omp parallel num_threads(threads)
  {
    auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < len; ++i) {
      if (match(static_cast<std::uint64_t>(i))) mine.push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  RowIds rows;
  rows.reserve(total);
  for (const auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
  return rows;
#else
  return select_if_serial(n, match);
#endif
}

}  // namespace colcrush::kernels
