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
  \file dualrail.hpp
  \brief Compilation of ternary circuits to Boolean circuits on rail pairs.

  Every ternary wire becomes two Boolean wires and every gate is replaced
  by its template from `detail/dualrail_templates.hpp`.  The result runs on
  ordinary Boolean hardware with at most k gates per source gate, where k
  is the largest template.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "detail/dualrail_templates.hpp"
#include "error.hpp"
#include "gates.hpp"
#include "io.hpp"
#include "netlist.hpp"
#include "sbit.hpp"

namespace sbitlab
{

struct rail_pair
{
  bool zero_rail;
  bool one_rail;

  friend bool operator==( rail_pair, rail_pair ) = default;
};

constexpr rail_pair encode( sbit v ) noexcept
{
  return { v != sbit::one, v != sbit::zero };
}

/*! \brief Rails of `w`, two per sbit, zero rail first. */
inline std::vector<bool> encode( sbit_word const& w )
{
  std::vector<bool> rails;
  rails.reserve( 2 * w.size() );
  for ( auto v : w )
  {
    auto const p = encode( v );
    rails.push_back( p.zero_rail );
    rails.push_back( p.one_rail );
  }
  return rails;
}

/*! \brief Inverse of `encode`; the pair 00 raises `invalid_encoding` with its 0-based index. */
inline sbit_word decode( std::vector<bool> const& rails )
{
  if ( rails.empty() || rails.size() % 2 != 0 )
  {
    throw malformed_operand( "rail vector must have positive even length, got " + std::to_string( rails.size() ) );
  }
  std::vector<sbit> out;
  out.reserve( rails.size() / 2 );
  for ( std::size_t i = 0; i < rails.size() / 2; ++i )
  {
    auto const z = rails[2 * i];
    auto const o = rails[2 * i + 1];
    if ( !z && !o )
    {
      throw invalid_encoding( "rail pair " + std::to_string( i ) + " is 00", i );
    }
    out.push_back( z && o ? sbit::s : o ? sbit::one : sbit::zero );
  }
  return sbit_word( std::move( out ) );
}

/*! \brief Parses a string of '0'/'1' characters into rails. */
inline std::vector<bool> parse_rails( std::string_view text )
{
  std::vector<bool> rails;
  for ( char c : text )
  {
    if ( c != '0' && c != '1' )
    {
      throw malformed_operand( "rail string may only contain 0 and 1, got '" + std::string( 1, c ) + "'" );
    }
    rails.push_back( c == '1' );
  }
  return rails;
}

inline std::string rails_to_string( std::vector<bool> const& rails )
{
  std::string s;
  for ( bool b : rails )
  {
    s.push_back( b ? '1' : '0' );
  }
  return s;
}

namespace detail
{

inline std::vector<bool> simulate_all( boolean_circuit const& c, std::vector<bool> const& in )
{
  std::vector<bool> values( c.num_wires(), false );
  for ( std::size_t k = 0; k < in.size(); ++k )
  {
    values[c.inputs()[k]] = in[k];
  }
  bool ins[3];
  bool outs[2];
  for ( auto const& n : c.nodes() )
  {
    for ( std::size_t k = 0; k < n.inputs.size(); ++k )
    {
      ins[k] = values[n.inputs[k]];
    }
    boolean_apply( n.kind, std::span<bool const>( ins, n.inputs.size() ), std::span<bool>( outs, n.outputs.size() ) );
    for ( std::size_t k = 0; k < n.outputs.size(); ++k )
    {
      values[n.outputs[k]] = outs[k];
    }
  }
  return values;
}

struct template_entry
{
  std::optional<boolean_circuit> circuit;
};

inline std::vector<template_entry> build_templates()
{
  std::vector<template_entry> entries( all_gate_kinds.size() );
  for ( auto g : table_gate_kinds )
  {
    auto tpl = read_netlist_string<boolean_gates>( std::string( dualrail_template( g ) ) );
    if ( tpl.num_inputs() != 2 * arity_in( g ) || tpl.num_outputs() != 2 * arity_out( g ) )
    {
      throw std::logic_error( "dual-rail template for " + std::string( gate_name( g ) ) + " has wrong arity" );
    }
    for ( auto const& w : all_words( arity_in( g ) ) )
    {
      auto const got = decode( eval_boolean( tpl, encode( w ) ) );
      if ( got != gate_apply( g, w ) )
      {
        throw std::logic_error( "dual-rail template for " + std::string( gate_name( g ) ) + " is wrong on " +
                                w.to_string() );
      }
    }
    entries[static_cast<std::size_t>( g )].circuit = std::move( tpl );
  }
  return entries;
}

/*! \brief Verified templates, built once. */
inline std::vector<template_entry> const& templates()
{
  static auto const t = build_templates();
  return t;
}

} // namespace detail

/*! \brief Boolean gate count of the template for `g`. */
inline std::size_t template_size( gate_kind g )
{
  if ( g == gate_kind::const0 || g == gate_kind::const1 )
  {
    return 2;
  }
  return detail::templates()[static_cast<std::size_t>( g )].circuit->gate_count();
}

/*! \brief Largest template; the compiled size is at most this times the source gate count. */
inline std::size_t max_template_size()
{
  std::size_t k = 0;
  for ( auto g : all_gate_kinds )
  {
    k = std::max( k, template_size( g ) );
  }
  return k;
}

struct dualrail_circuit
{
  boolean_circuit circuit;
  /* rails of every ternary wire of the source, indexed by its wire id */
  std::vector<std::array<wire_id, 2>> pairs;
  std::size_t source_gates = 0;
  std::size_t k = 0;
};

/*! \brief Replaces every gate with its rail template.  Input wire `x` becomes `x_0` and `x_1`. */
inline dualrail_circuit compile_dualrail( ternary_circuit const& c )
{
  netlist_builder<boolean_gates> b;
  std::vector<std::array<wire_id, 2>> pairs( c.num_wires() );
  for ( auto w : c.inputs() )
  {
    auto const& name = c.wire_name( w );
    pairs[w] = { b.input( name + "_0" ), b.input( name + "_1" ) };
  }
  for ( auto const& n : c.nodes() )
  {
    std::vector<wire_id> rails;
    if ( n.kind == gate_kind::const0 || n.kind == gate_kind::const1 )
    {
      auto const z = b.add1( n.kind == gate_kind::const0 ? gate_kind::const1 : gate_kind::const0, {} );
      auto const o = b.add1( n.kind == gate_kind::const0 ? gate_kind::const0 : gate_kind::const1, {} );
      rails = { z, o };
    }
    else
    {
      std::vector<wire_id> ins;
      for ( auto w : n.inputs )
      {
        ins.push_back( pairs[w][0] );
        ins.push_back( pairs[w][1] );
      }
      rails = b.embed( *detail::templates()[static_cast<std::size_t>( n.kind )].circuit, ins );
    }
    for ( std::size_t j = 0; j < n.outputs.size(); ++j )
    {
      pairs[n.outputs[j]] = { rails[2 * j], rails[2 * j + 1] };
    }
  }
  for ( auto w : c.outputs() )
  {
    b.output( pairs[w][0] );
    b.output( pairs[w][1] );
  }
  return { std::move( b ).build(), std::move( pairs ), c.gate_count(), max_template_size() };
}

/*! \brief Filled by `eval_dualrail` when asked: every ternary wire whose rails came out 00. */
struct rail_report
{
  std::size_t pairs_checked = 0;
  std::vector<wire_id> invalid_wires;
};

/*! \brief Evaluates a compiled circuit on rails; optionally checks every internal pair. */
inline std::vector<bool> eval_dualrail( dualrail_circuit const& d, std::vector<bool> const& rails,
                                        rail_report* report = nullptr )
{
  if ( rails.size() != d.circuit.num_inputs() )
  {
    throw arity_error( "dual-rail circuit takes " + std::to_string( d.circuit.num_inputs() ) + " rails, got " +
                       std::to_string( rails.size() ) );
  }
  decode( rails );
  auto const values = detail::simulate_all( d.circuit, rails );
  if ( report )
  {
    for ( wire_id w = 0; w < d.pairs.size(); ++w )
    {
      ++report->pairs_checked;
      if ( !values[d.pairs[w][0]] && !values[d.pairs[w][1]] )
      {
        report->invalid_wires.push_back( w );
      }
    }
  }
  std::vector<bool> out;
  for ( auto w : d.circuit.outputs() )
  {
    out.push_back( values[w] );
  }
  return out;
}

/*! \brief Evaluates a plain Boolean netlist on rails, treating consecutive inputs as pairs. */
inline std::vector<bool> eval_dualrail( boolean_circuit const& c, std::vector<bool> const& rails )
{
  if ( c.num_inputs() % 2 != 0 || c.num_outputs() % 2 != 0 )
  {
    throw arity_error( "dual-rail netlist needs an even number of inputs and outputs" );
  }
  if ( rails.size() != c.num_inputs() )
  {
    throw arity_error( "netlist takes " + std::to_string( c.num_inputs() ) + " rails, got " +
                       std::to_string( rails.size() ) );
  }
  decode( rails );
  return eval_boolean( c, rails );
}

/*! \brief Comment lines naming each input and output rail pair. */
inline std::vector<std::string> pair_comments( boolean_circuit const& c )
{
  std::vector<std::string> lines;
  for ( std::size_t i = 0; 2 * i < c.num_inputs(); ++i )
  {
    lines.push_back( "pair " + std::to_string( i + 1 ) + " = " + c.wire_name( c.inputs()[2 * i] ) + " " +
                     c.wire_name( c.inputs()[2 * i + 1] ) );
  }
  for ( std::size_t i = 0; 2 * i < c.num_outputs(); ++i )
  {
    lines.push_back( "output pair " + std::to_string( i + 1 ) + " = " + c.wire_name( c.outputs()[2 * i] ) + " " +
                     c.wire_name( c.outputs()[2 * i + 1] ) );
  }
  return lines;
}

} // namespace sbitlab
