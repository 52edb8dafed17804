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


// Random circuit generators shared by the property tests.

#pragma once

#include <sbitlab/sbitlab.hpp>

#include <random>
#include <vector>

namespace gen
{

/* A random ternary netlist: gates drawn from the table gates, a FANOUT
 * inserted whenever a gate needs more wires than are free.  Every wire
 * left unconsumed becomes an output. */
inline sbitlab::ternary_circuit random_circuit( std::size_t n_in, std::size_t n_gates, std::mt19937_64& rng )
{
  using namespace sbitlab;
  netlist_builder<ternary_gates> b;
  std::vector<wire_id> pool;
  for ( std::size_t i = 0; i < n_in; ++i )
  {
    pool.push_back( b.input( "x" + std::to_string( i + 1 ) ) );
  }
  auto const take = [&] {
    auto const k = rng() % pool.size();
    auto const w = pool[k];
    pool.erase( pool.begin() + k );
    return w;
  };
  for ( std::size_t g = 0; g < n_gates; ++g )
  {
    auto const kind = table_gate_kinds[rng() % table_gate_kinds.size()];
    while ( pool.size() < arity_in( kind ) )
    {
      auto const [p, q] = b.fanout( take() );
      pool.push_back( p );
      pool.push_back( q );
    }
    std::vector<wire_id> ins;
    for ( std::size_t k = 0; k < arity_in( kind ); ++k )
    {
      ins.push_back( take() );
    }
    for ( auto w : b.add( kind, ins ) )
    {
      pool.push_back( w );
    }
  }
  for ( auto w : pool )
  {
    b.output( w );
  }
  return std::move( b ).build();
}

/* AND of two single-output circuits on disjoint inputs. */
inline sbitlab::ternary_circuit and_join( sbitlab::ternary_circuit const& f, sbitlab::ternary_circuit const& g )
{
  using namespace sbitlab;
  netlist_builder<ternary_gates> b;
  std::vector<wire_id> fi;
  std::vector<wire_id> gi;
  for ( std::size_t i = 0; i < f.num_inputs(); ++i )
  {
    fi.push_back( b.input( "x" + std::to_string( i + 1 ) ) );
  }
  for ( std::size_t i = 0; i < g.num_inputs(); ++i )
  {
    gi.push_back( b.input( "y" + std::to_string( i + 1 ) ) );
  }
  auto const a = b.embed( f, fi );
  auto const c = b.embed( g, gi );
  b.output( b.add1( gate_kind::and_, { a[0], c[0] } ) );
  return std::move( b ).build();
}

inline sbitlab::ternary_circuit not_wrap( sbitlab::ternary_circuit const& f )
{
  using namespace sbitlab;
  netlist_builder<ternary_gates> b;
  std::vector<wire_id> ins;
  for ( std::size_t i = 0; i < f.num_inputs(); ++i )
  {
    ins.push_back( b.input( "x" + std::to_string( i + 1 ) ) );
  }
  auto const outs = b.embed( f, ins );
  for ( auto w : outs )
  {
    b.output( b.add1( gate_kind::not_, { w } ) );
  }
  return std::move( b ).build();
}

} // namespace gen
