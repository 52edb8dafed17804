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
  \file convert.hpp
  \brief Lowering of classical AND/OR/NOT/XOR/FANOUT netlists to w-additive circuits.

  Classical logic relies on duplicating a wire and using both copies, and
  that is exactly what breaks weak additivity: x AND NOT x is 0 on basis
  inputs but s on s.  The pass replaces the two such idioms it knows with a
  constant gate and maps the rest one to one:

  \verbatim
       +---------------+
  x -- FANOUT          AND --    ==>    x -- C0 --
       +---- NOT ------+

       +---------------+
  x -- FANOUT          OR ---    ==>    x -- C1 --
       +---- NOT ------+
  \endverbatim

  Any FANOUT left over means the netlist is not convertible by these rules.
  The optional fallback resynthesizes from the 2^n Boolean truth table.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "error.hpp"
#include "gates.hpp"
#include "netlist.hpp"
#include "synthesis.hpp"

namespace sbitlab
{

enum class convert_status
{
  converted,
  not_convertible_by_rules
};

/*! \brief One applied rewrite; `nodes` are the FANOUT, NOT and AND/OR node indices of the source. */
struct rewrite
{
  gate_kind replacement; // c0 or c1
  std::vector<std::size_t> nodes;
};

struct convert_report
{
  convert_status status = convert_status::converted;
  /* set when status is converted or the fallback ran */
  std::optional<ternary_circuit> circuit;
  std::vector<rewrite> rewrites;
  std::size_t substitutions = 0;
  /* source node indices of FANOUTs that matched no rewrite */
  std::vector<std::size_t> unmatched_fanouts;
  bool fallback_used = false;
};

struct convert_options
{
  bool allow_fallback = false;
  std::size_t cap = default_cap;
  /* called with the number of Boolean evaluations before the fallback runs */
  std::function<void( std::uint64_t )> on_fallback = {};
};

namespace detail
{

inline constexpr std::size_t consumer_output = std::size_t( -1 );

struct match_result
{
  std::vector<rewrite> rewrites;
  std::vector<std::size_t> unmatched_fanouts;
  /* for each source node: index into rewrites, or -1 */
  std::vector<std::ptrdiff_t> owner;
};

inline match_result match_rewrites( classical_circuit const& c )
{
  auto const nodes = c.nodes();
  std::vector<std::size_t> consumer( c.num_wires(), consumer_output );
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    for ( auto w : nodes[i].inputs )
    {
      consumer[w] = i;
    }
  }

  match_result m;
  m.owner.assign( nodes.size(), -1 );
  for ( std::size_t f = 0; f < nodes.size(); ++f )
  {
    if ( nodes[f].kind != gate_kind::fanout )
    {
      continue;
    }
    bool matched = false;
    for ( int side = 0; side < 2 && !matched; ++side )
    {
      auto const via = consumer[nodes[f].outputs[side]];
      auto const direct = consumer[nodes[f].outputs[1 - side]];
      if ( via == consumer_output || direct == consumer_output || nodes[via].kind != gate_kind::not_ )
      {
        continue;
      }
      auto const join = consumer[nodes[via].outputs[0]];
      if ( join == consumer_output || join != direct )
      {
        continue;
      }
      auto const kind = nodes[join].kind;
      if ( kind != gate_kind::and_ && kind != gate_kind::or_ )
      {
        continue;
      }
      if ( m.owner[f] >= 0 || m.owner[via] >= 0 || m.owner[join] >= 0 )
      {
        throw structural_error( "overlapping rewrite matches", join );
      }
      std::vector<std::size_t> ids{ f, via, join };
      std::sort( ids.begin(), ids.end() );
      m.owner[f] = m.owner[via] = m.owner[join] = static_cast<std::ptrdiff_t>( m.rewrites.size() );
      m.rewrites.push_back( { kind == gate_kind::and_ ? gate_kind::c0 : gate_kind::c1, std::move( ids ) } );
      matched = true;
    }
    if ( !matched )
    {
      m.unmatched_fanouts.push_back( f );
    }
  }
  return m;
}

} // namespace detail

/*! \brief Whether the rewrites alone remove every FANOUT; lists the ones they do not. */
inline std::vector<std::size_t> unmatched_fanouts( classical_circuit const& c )
{
  return detail::match_rewrites( c ).unmatched_fanouts;
}

inline bool is_convertible_by_rules( classical_circuit const& c )
{
  return unmatched_fanouts( c ).empty();
}

/*! \brief Lowers a classical netlist to a ternary circuit with the same Boolean behavior.
 *
 * Surviving wires keep their names; each rewritten C0/C1 drives the wire
 * the AND/OR used to drive.
 */
inline convert_report convert( classical_circuit const& c, convert_options const& opts = {} )
{
  auto m = detail::match_rewrites( c );
  convert_report report;
  report.rewrites = std::move( m.rewrites );
  report.unmatched_fanouts = std::move( m.unmatched_fanouts );

  if ( report.unmatched_fanouts.empty() )
  {
    auto const nodes = c.nodes();
    netlist_builder<ternary_gates> b;
    std::vector<wire_id> map( c.num_wires(), wire_id( -1 ) );
    for ( auto w : c.inputs() )
    {
      map[w] = b.input( c.wire_name( w ) );
    }
    for ( std::size_t i = 0; i < nodes.size(); ++i )
    {
      auto const& n = nodes[i];
      if ( m.owner[i] >= 0 )
      {
        auto const& r = report.rewrites[m.owner[i]];
        if ( n.kind != gate_kind::and_ && n.kind != gate_kind::or_ )
        {
          continue;
        }
        auto const source = nodes[r.nodes.front()].inputs[0];
        map[n.outputs[0]] = b.add1( r.replacement, { map[source] }, c.wire_name( n.outputs[0] ) );
        continue;
      }
      std::vector<wire_id> ins;
      for ( auto w : n.inputs )
      {
        ins.push_back( map[w] );
      }
      std::vector<std::string> names;
      for ( auto w : n.outputs )
      {
        names.push_back( c.wire_name( w ) );
      }
      auto const outs = b.add( n.kind, ins, std::move( names ) );
      for ( std::size_t j = 0; j < outs.size(); ++j )
      {
        map[n.outputs[j]] = outs[j];
      }
      ++report.substitutions;
    }
    for ( auto w : c.outputs() )
    {
      b.output( map[w] );
    }
    report.circuit = std::move( b ).build();
    return report;
  }

  report.status = convert_status::not_convertible_by_rules;
  if ( opts.allow_fallback )
  {
    if ( c.num_inputs() > opts.cap )
    {
      throw cap_exceeded( c.num_inputs(), opts.cap, '2' );
    }
    if ( opts.on_fallback )
    {
      opts.on_fallback( std::uint64_t{ 1 } << c.num_inputs() );
    }
    report.circuit = synthesize( boolean_table_of( c, opts.cap ) );
    report.fallback_used = true;
  }
  return report;
}

} // namespace sbitlab
