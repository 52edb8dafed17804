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
  \file circuit.hpp
  \brief Circuit-level verification: basis tables and exhaustive w-additivity checks.

  Composing w-additive gates does not always give a w-additive circuit, so
  every circuit built by hand or by a pass can be checked here: the
  gate-local value on each of the 3^n inputs must equal the extension of
  the circuit's own basis table.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "detail/parallel.hpp"
#include "error.hpp"
#include "gates.hpp"
#include "netlist.hpp"
#include "sbit.hpp"

namespace sbitlab
{

struct verdict
{
  enum class status_t
  {
    wadditive,
    violation
  };

  status_t status = status_t::wadditive;
  std::optional<sbit_word> witness;
  std::size_t gate_count = 0;
  std::size_t query_count = 0;

  bool wadditive() const noexcept { return status == status_t::wadditive; }
};

/*! \brief Restriction of `eval(c, .)` to the 2^n basis words. */
template<class GateSet>
basis_table basis_table_of( netlist<GateSet> const& c, std::size_t cap = default_cap )
{
  auto const n = c.num_inputs();
  if ( n > cap )
  {
    throw cap_exceeded( n, cap, '2' );
  }
  std::vector<sbit_word> rows;
  rows.reserve( std::size_t{ 1 } << n );
  std::vector<sbit> scratch;
  std::vector<sbit> out( c.num_outputs() );
  for ( std::uint64_t r = 0; r < ( std::uint64_t{ 1 } << n ); ++r )
  {
    auto const in = word_from_basis_index( r, n );
    eval_into( c, in.symbols(), out, scratch );
    rows.emplace_back( out );
  }
  return basis_table( n, c.num_outputs(), std::move( rows ) );
}

/*! \brief Boolean truth table of a netlist read as classical logic. */
template<class GateSet>
basis_table boolean_table_of( netlist<GateSet> const& c, std::size_t cap = default_cap )
{
  auto const n = c.num_inputs();
  if ( n > cap )
  {
    throw cap_exceeded( n, cap, '2' );
  }
  std::vector<sbit_word> rows;
  rows.reserve( std::size_t{ 1 } << n );
  for ( std::uint64_t r = 0; r < ( std::uint64_t{ 1 } << n ); ++r )
  {
    std::vector<bool> in( n );
    for ( std::size_t k = 0; k < n; ++k )
    {
      in[k] = ( r >> ( n - 1 - k ) ) & 1u;
    }
    std::vector<sbit> out;
    for ( bool b : eval_boolean( c, in ) )
    {
      out.push_back( from_bool( b ) );
    }
    rows.emplace_back( std::move( out ) );
  }
  return basis_table( n, c.num_outputs(), std::move( rows ) );
}

/*! \brief Exhaustive w-additivity check of a circuit under gate-local semantics.
 *
 * Returns the lexicographically least input on which the circuit differs
 * from the extension of its basis table, if any.
 */
template<class GateSet>
verdict check_circuit( netlist<GateSet> const& c, std::size_t cap = default_cap )
{
  detail::require_cap( c.num_inputs(), cap );
  auto const result = detail::wadd_sweep( c.num_inputs(), c.num_outputs(), [&]( std::uint64_t idx, std::span<sbit> out ) {
    thread_local std::vector<sbit> scratch;
    thread_local std::vector<sbit> in;
    in.resize( c.num_inputs() );
    auto rest = idx;
    for ( std::size_t k = in.size(); k-- > 0; rest /= 3 )
    {
      in[k] = static_cast<sbit>( rest % 3 );
    }
    eval_into( c, in, out, scratch );
  } );
  verdict v;
  v.gate_count = c.gate_count();
  if ( !result.wadditive )
  {
    v.status = verdict::status_t::violation;
    v.witness = result.witness;
  }
  return v;
}

} // namespace sbitlab
