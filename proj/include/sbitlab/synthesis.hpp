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

/*!
  \file synthesis.hpp
  \brief Universal synthesis of any w-additive operator from its basis table.

  One-input tables map onto the nine one-sbit gates.  For n > 1 inputs the
  table G is split on its first input into G0 (first input 0) and G1 (first
  input 1); the remaining inputs are duplicated with FANOUT, each half is
  synthesized recursively, and a T gate controlled by the first input picks
  G0, G1, or their sum when the control is s.

  \verbatim
  x0 ------------------------------+
  x1..xn -- FANOUT --+-- [ G0 ] ---T---> G(x0 x1..xn)
                     +-- [ G1 ] ---+
  \endverbatim
*/

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "error.hpp"
#include "gates.hpp"
#include "netlist.hpp"
#include "sbit.hpp"

namespace sbitlab
{

struct synthesis_options
{
  /* Restrict to NOT, S0, AND, OR, FANOUT, T (plus constant sources for the
   * AND/OR forms of C0 and C1) instead of the nine named one-sbit gates. */
  bool primitive_set = false;
};

/*! \brief The named one-sbit gate with basis rows (at0, at1). */
inline gate_kind one_sbit_gate( sbit at0, sbit at1 )
{
  using enum sbit;
  if ( at0 == zero && at1 == one ) return gate_kind::i;
  if ( at0 == one && at1 == zero ) return gate_kind::not_;
  if ( at0 == s && at1 == s ) return gate_kind::h;
  if ( at0 == zero && at1 == zero ) return gate_kind::c0;
  if ( at0 == one && at1 == one ) return gate_kind::c1;
  if ( at0 == s && at1 == zero ) return gate_kind::s0;
  if ( at0 == zero && at1 == s ) return gate_kind::s0bar;
  if ( at0 == s && at1 == one ) return gate_kind::s1;
  return gate_kind::s1bar;
}

namespace detail
{

template<class GateSet>
wire_id emit_primitive( netlist_builder<GateSet>& b, gate_kind g, wire_id x )
{
  auto const NOT = [&]( wire_id w ) { return b.add1( gate_kind::not_, { w } ); };
  auto const S0 = [&]( wire_id w ) { return b.add1( gate_kind::s0, { w } ); };
  switch ( g )
  {
  case gate_kind::i:
    return x;
  case gate_kind::not_:
    return NOT( x );
  case gate_kind::s0:
    return S0( x );
  case gate_kind::s0bar:
    return S0( NOT( x ) );
  case gate_kind::s1:
    return NOT( S0( x ) );
  case gate_kind::s1bar:
    return NOT( S0( NOT( x ) ) );
  case gate_kind::h:
    // S1BAR after S1
    return NOT( S0( NOT( NOT( S0( x ) ) ) ) );
  case gate_kind::c0:
    return b.add1( gate_kind::and_, { x, b.add1( gate_kind::const0, {} ) } );
  case gate_kind::c1:
    return b.add1( gate_kind::or_, { x, b.add1( gate_kind::const1, {} ) } );
  default:
    throw std::logic_error( "not a one-sbit gate" );
  }
}

template<class GateSet>
wire_id synthesize_into( netlist_builder<GateSet>& b, basis_table const& t, std::span<wire_id const> inputs,
                         synthesis_options const& opts )
{
  if ( t.n_in() == 1 )
  {
    auto const g = one_sbit_gate( t.row( 0 )[0], t.row( 1 )[0] );
    return opts.primitive_set ? emit_primitive( b, g, inputs[0] ) : b.add1( g, { inputs[0] } );
  }
  std::vector<wire_id> for_g0;
  std::vector<wire_id> for_g1;
  for ( auto w : inputs.subspan( 1 ) )
  {
    auto const [a, c] = b.fanout( w );
    for_g0.push_back( a );
    for_g1.push_back( c );
  }
  auto const g0 = synthesize_into( b, t.restrict_first( sbit::zero ), for_g0, opts );
  auto const g1 = synthesize_into( b, t.restrict_first( sbit::one ), for_g1, opts );
  return b.add1( gate_kind::t, { inputs[0], g0, g1 } );
}

} // namespace detail

/*! \brief Builds a ternary circuit whose extension equals the extension of `t`.
 *
 * Multi-output tables are synthesized output by output; each output gets
 * its own FANOUT copy of every input and nothing else is shared.
 */
inline ternary_circuit synthesize( basis_table const& t, synthesis_options const& opts = {} )
{
  netlist_builder<ternary_gates> b;
  std::vector<wire_id> inputs;
  for ( std::size_t k = 0; k < t.n_in(); ++k )
  {
    inputs.push_back( b.input( "x" + std::to_string( k + 1 ) ) );
  }

  // copies[j] holds the input wires reserved for output j
  std::vector<std::vector<wire_id>> copies( t.n_out() );
  for ( auto w : inputs )
  {
    auto rest = w;
    for ( std::size_t j = 0; j + 1 < t.n_out(); ++j )
    {
      auto const [mine, next] = b.fanout( rest );
      copies[j].push_back( mine );
      rest = next;
    }
    copies[t.n_out() - 1].push_back( rest );
  }
  for ( std::size_t j = 0; j < t.n_out(); ++j )
  {
    auto const component = t.n_out() == 1 ? t : t.component( j );
    b.output( detail::synthesize_into( b, component, copies[j], opts ) );
  }
  return std::move( b ).build();
}

} // namespace sbitlab
