// Copyright 2026 The sbitlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sbitlab::detail
{

/* Below this many items a sweep runs on the calling thread. */
inline constexpr std::uint64_t parallel_grain = 1u << 14;

/*! \brief Calls `fn(begin, end)` on disjoint contiguous chunks of [0, count).
 *
 * `fn` must be safe to call concurrently on disjoint ranges.  The first
 * exception thrown by any chunk is rethrown on the calling thread.
 */
template<class Fn>
void parallel_for( std::uint64_t count, Fn&& fn )
{
  auto const hw = std::max( 1u, std::thread::hardware_concurrency() );
  auto const workers = static_cast<unsigned>( std::min<std::uint64_t>( hw, count / parallel_grain ) );
  if ( workers <= 1 )
  {
    fn( std::uint64_t{ 0 }, count );
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve( workers );
  auto const chunk = ( count + workers - 1 ) / workers;
  for ( unsigned t = 0; t < workers; ++t )
  {
    auto const begin = std::min( count, t * chunk );
    auto const end = std::min( count, begin + chunk );
    pool.emplace_back( [&, begin, end] {
      try
      {
        fn( begin, end );
      }
      catch ( ... )
      {
        std::lock_guard lock( failure_mutex );
        if ( !failure )
        {
          failure = std::current_exception();
        }
      }
    } );
  }
  for ( auto& th : pool )
  {
    th.join();
  }
  if ( failure )
  {
    std::rethrow_exception( failure );
  }
}

} // namespace sbitlab::detail
