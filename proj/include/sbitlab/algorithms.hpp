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
  \file algorithms.hpp
  \brief Query algorithms over w-additive oracles and the circuit families they run on.

  `deutsch_classify` decides constant versus non-constant with one query on
  the all-s word.  `search` recovers the unique marked word of an AND-of-
  literals oracle with n queries.
*/

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "error.hpp"
#include "gates.hpp"
#include "netlist.hpp"
#include "sbit.hpp"

namespace sbitlab
{

/*! \brief Wraps a circuit and counts evaluations. */
class counting_oracle
{
public:
  explicit counting_oracle( ternary_circuit const& c ) : c_( c ) {}

  sbit_word operator()( sbit_word const& in )
  {
    ++queries_;
    return eval( c_, in );
  }

  std::size_t queries() const noexcept { return queries_; }

private:
  ternary_circuit const& c_;
  std::size_t queries_ = 0;
};

enum class dj_class
{
  constant0,
  constant1,
  nonconstant
};

inline char const* to_string( dj_class c ) noexcept
{
  switch ( c )
  {
  case dj_class::constant0:
    return "constant0";
  case dj_class::constant1:
    return "constant1";
  default:
    return "nonconstant";
  }
}

struct dj_result
{
  dj_class classification;
  std::size_t queries;
};

struct dj_options
{
  /* exhaustively confirm the oracle is w-additive before querying it */
  bool verify = true;
  std::size_t cap = default_cap;
};

/*! \brief Classifies a single-output oracle as constant 0, constant 1, or not constant. */
inline dj_result deutsch_classify( ternary_circuit const& oracle, dj_options const& opts = {} )
{
  if ( oracle.num_outputs() != 1 )
  {
    throw arity_error( "oracle must have exactly one output, has " + std::to_string( oracle.num_outputs() ) );
  }
  if ( opts.verify )
  {
    auto const v = check_circuit( oracle, opts.cap );
    if ( !v.wadditive() )
    {
      throw inconsistency_error( "oracle is not w-additive; witness " + v.witness->to_string() );
    }
  }
  counting_oracle f( oracle );
  auto const y = f( sbit_word::filled( oracle.num_inputs(), sbit::s ) )[0];
  auto const cls = y == sbit::zero ? dj_class::constant0 : y == sbit::one ? dj_class::constant1 : dj_class::nonconstant;
  return { cls, f.queries() };
}

struct search_result
{
  sbit_word found;
  std::size_t queries;
  /* probe_outputs[j] is the oracle's answer to the probe for position j */
  std::vector<sbit> probe_outputs;
};

struct search_options
{
  /* evaluate the oracle on the recovered word afterwards; not counted as a query */
  bool check_result = true;
};

/*! \brief Recovers `a` from an oracle computing AND over i of (x_i == a_i).
 *
 * Position j is probed with 0 there and s everywhere else.  If a_j = 1 the
 * probe is never marked and the oracle answers 0; if a_j = 0 the marked
 * word lies in the probe's maximal set and the answer is s (or 1 when n = 1).
 */
inline search_result search( ternary_circuit const& oracle, std::size_t n, search_options const& opts = {} )
{
  if ( oracle.num_inputs() != n || oracle.num_outputs() != 1 )
  {
    throw arity_error( "search oracle must map " + std::to_string( n ) + " sbits to 1, got " +
                       std::to_string( oracle.num_inputs() ) + " -> " + std::to_string( oracle.num_outputs() ) );
  }
  counting_oracle f( oracle );
  std::vector<sbit> a( n, sbit::zero );
  std::vector<sbit> probes( n, sbit::zero );
  for ( std::size_t j = n; j-- > 0; )
  {
    auto const y = f( sbit_word::filled( n, sbit::s ).with( j, sbit::zero ) )[0];
    probes[j] = y;
    a[j] = y == sbit::zero ? sbit::one : sbit::zero;
  }
  sbit_word found( std::move( a ) );
  if ( opts.check_result && eval( oracle, found )[0] != sbit::one )
  {
    throw inconsistency_error( "oracle answers do not match an AND-of-literals oracle; decoded " +
                               found.to_string() + " is not marked" );
  }
  return { std::move( found ), f.queries(), std::move( probes ) };
}

/*! \brief I or NOT on each input according to `a`, then a left-to-right AND chain.  2n - 1 gates. */
inline ternary_circuit oracle_circuit( sbit_word const& a )
{
  if ( !a.is_basis() )
  {
    throw malformed_operand( "oracle target must be a basis word, got " + a.to_string() );
  }
  netlist_builder<ternary_gates> b;
  std::vector<wire_id> lits;
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    auto const x = b.input( "x" + std::to_string( i + 1 ) );
    lits.push_back( b.add1( a[i] == sbit::one ? gate_kind::i : gate_kind::not_, { x } ) );
  }
  auto acc = lits[0];
  for ( std::size_t i = 1; i < lits.size(); ++i )
  {
    acc = b.add1( gate_kind::and_, { acc, lits[i] } );
  }
  b.output( acc );
  return std::move( b ).build();
}

/*! \brief The constant function with value `v` on n inputs.  2n - 1 gates. */
inline ternary_circuit constant_circuit( std::size_t n, sbit v )
{
  if ( n == 0 || !is_basis( v ) )
  {
    throw malformed_operand( "constant circuit needs n >= 1 and a basis value" );
  }
  netlist_builder<ternary_gates> b;
  std::vector<wire_id> consts;
  for ( std::size_t i = 0; i < n; ++i )
  {
    auto const x = b.input( "x" + std::to_string( i + 1 ) );
    consts.push_back( b.add1( v == sbit::one ? gate_kind::c1 : gate_kind::c0, { x } ) );
  }
  auto acc = consts[0];
  for ( std::size_t i = 1; i < n; ++i )
  {
    acc = b.add1( gate_kind::and_, { acc, consts[i] } );
  }
  b.output( acc );
  return std::move( b ).build();
}

/*! \brief f(x) = x_j (1-based), the other inputs absorbed through C0 into the OR.  2n - 2 gates. */
inline ternary_circuit projection_circuit( std::size_t n, std::size_t j )
{
  if ( n == 0 || j == 0 || j > n )
  {
    throw malformed_operand( "projection needs 1 <= j <= n" );
  }
  netlist_builder<ternary_gates> b;
  std::vector<wire_id> xs;
  for ( std::size_t i = 0; i < n; ++i )
  {
    xs.push_back( b.input( "x" + std::to_string( i + 1 ) ) );
  }
  if ( n == 1 )
  {
    b.output( xs[0] );
    return std::move( b ).build();
  }
  std::optional<wire_id> acc;
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( i + 1 == j )
    {
      continue;
    }
    auto const z = b.add1( gate_kind::c0, { xs[i] } );
    acc = acc ? b.add1( gate_kind::and_, { *acc, z } ) : z;
  }
  b.output( b.add1( gate_kind::or_, { xs[j - 1], *acc } ) );
  return std::move( b ).build();
}

/*! \brief Classical form of `constant_circuit`: x AND NOT x (or x OR NOT x) per input, then ANDs. */
inline classical_circuit classical_constant_circuit( std::size_t n, sbit v )
{
  if ( n == 0 || !is_basis( v ) )
  {
    throw malformed_operand( "constant circuit needs n >= 1 and a basis value" );
  }
  netlist_builder<classical_gates> b;
  std::vector<wire_id> consts;
  for ( std::size_t i = 0; i < n; ++i )
  {
    auto const [p, q] = b.fanout( b.input( "x" + std::to_string( i + 1 ) ) );
    auto const nq = b.add1( gate_kind::not_, { q } );
    consts.push_back( b.add1( v == sbit::one ? gate_kind::or_ : gate_kind::and_, { p, nq } ) );
  }
  auto acc = consts[0];
  for ( std::size_t i = 1; i < n; ++i )
  {
    acc = b.add1( gate_kind::and_, { acc, consts[i] } );
  }
  b.output( acc );
  return std::move( b ).build();
}

/*! \brief Classical form of `projection_circuit`. */
inline classical_circuit classical_projection_circuit( std::size_t n, std::size_t j )
{
  if ( n < 2 || j == 0 || j > n )
  {
    throw malformed_operand( "classical projection needs n >= 2 and 1 <= j <= n" );
  }
  netlist_builder<classical_gates> b;
  std::vector<wire_id> xs;
  for ( std::size_t i = 0; i < n; ++i )
  {
    xs.push_back( b.input( "x" + std::to_string( i + 1 ) ) );
  }
  std::optional<wire_id> acc;
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( i + 1 == j )
    {
      continue;
    }
    auto const [p, q] = b.fanout( xs[i] );
    auto const z = b.add1( gate_kind::and_, { p, b.add1( gate_kind::not_, { q } ) } );
    acc = acc ? b.add1( gate_kind::and_, { *acc, z } ) : z;
  }
  b.output( b.add1( gate_kind::or_, { xs[j - 1], *acc } ) );
  return std::move( b ).build();
}

} // namespace sbitlab
