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
  \file io.hpp
  \brief Text formats: netlists, basis tables and full tables.

  Netlist grammar (`#` starts a comment anywhere on a line):

  \verbatim
  inputs a b c
  t = NOT b
  u = OR a t
  v,w = FANOUT c
  ...
  outputs y
  \endverbatim

  Nodes may appear in any order; the reader sorts them topologically and
  rejects cycles.  Basis tables are `basis n_in n_out` followed by one
  `<key> <value>` row per basis word; full tables use the header
  `full n_in n_out` and list all 3^n keys.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "gates.hpp"
#include "netlist.hpp"
#include "sbit.hpp"

namespace sbitlab
{

namespace detail
{

struct text_line
{
  std::size_t number;
  std::string text;
};

inline std::string trim( std::string_view s )
{
  auto const b = s.find_first_not_of( " \t\r" );
  if ( b == std::string_view::npos )
  {
    return {};
  }
  auto const e = s.find_last_not_of( " \t\r" );
  return std::string( s.substr( b, e - b + 1 ) );
}

/* Non-empty lines with comments stripped. */
inline std::vector<text_line> content_lines( std::istream& is )
{
  std::vector<text_line> out;
  std::string raw;
  std::size_t number = 0;
  while ( std::getline( is, raw ) )
  {
    ++number;
    if ( auto const hash = raw.find( '#' ); hash != std::string::npos )
    {
      raw.erase( hash );
    }
    auto t = trim( raw );
    if ( !t.empty() )
    {
      out.push_back( { number, std::move( t ) } );
    }
  }
  return out;
}

inline std::vector<std::string> split_ws( std::string_view s )
{
  std::istringstream ss{ std::string( s ) };
  std::vector<std::string> out;
  std::string tok;
  while ( ss >> tok )
  {
    out.push_back( tok );
  }
  return out;
}

[[noreturn]] inline void parse_fail( std::size_t line, std::string const& what )
{
  throw structural_error( "line " + std::to_string( line ) + ": " + what );
}

} // namespace detail

/*! \brief Reads a netlist in the text grammar above. */
template<class GateSet>
netlist<GateSet> read_netlist( std::istream& is )
{
  auto const lines = detail::content_lines( is );
  if ( lines.size() < 2 )
  {
    throw structural_error( "netlist needs an inputs line and an outputs line" );
  }

  std::vector<std::string> names;
  std::unordered_map<std::string, wire_id> ids;
  auto declare = [&]( std::string const& name, std::size_t line ) {
    if ( !is_valid_wire_name( name ) )
    {
      detail::parse_fail( line, "invalid wire name '" + name + "'" );
    }
    if ( ids.count( name ) )
    {
      detail::parse_fail( line, "wire '" + name + "' has more than one driver" );
    }
    ids.emplace( name, static_cast<wire_id>( names.size() ) );
    names.push_back( name );
    return static_cast<wire_id>( names.size() - 1 );
  };

  auto const head = detail::split_ws( lines.front().text );
  if ( head.empty() || head.front() != "inputs" )
  {
    detail::parse_fail( lines.front().number, "first line must be 'inputs ...'" );
  }
  std::vector<wire_id> inputs;
  for ( std::size_t k = 1; k < head.size(); ++k )
  {
    inputs.push_back( declare( head[k], lines.front().number ) );
  }

  auto const tail = detail::split_ws( lines.back().text );
  if ( tail.empty() || tail.front() != "outputs" )
  {
    detail::parse_fail( lines.back().number, "last line must be 'outputs ...'" );
  }

  struct raw_node
  {
    std::size_t line;
    gate_kind kind;
    std::vector<std::string> inputs;
    std::vector<wire_id> outputs;
  };
  std::vector<raw_node> raw;
  for ( std::size_t l = 1; l + 1 < lines.size(); ++l )
  {
    auto const& [number, text] = lines[l];
    auto const eq = text.find( '=' );
    if ( eq == std::string::npos )
    {
      detail::parse_fail( number, "expected 'out[,out2] = GATE in...'" );
    }
    raw_node n{ number, gate_kind::i, {}, {} };
    std::string lhs = text.substr( 0, eq );
    std::vector<std::string> out_names;
    std::stringstream ls( lhs );
    std::string part;
    while ( std::getline( ls, part, ',' ) )
    {
      out_names.push_back( detail::trim( part ) );
    }
    auto rhs = detail::split_ws( std::string_view( text ).substr( eq + 1 ) );
    if ( rhs.empty() )
    {
      detail::parse_fail( number, "missing gate name" );
    }
    auto const kind = parse_gate_kind( rhs.front() );
    if ( !kind )
    {
      detail::parse_fail( number, "unknown gate '" + rhs.front() + "'" );
    }
    if ( !GateSet::allows( *kind ) )
    {
      detail::parse_fail( number, "gate " + rhs.front() + " is not part of the " + std::string( GateSet::name ) +
                                      " gate set" );
    }
    n.kind = *kind;
    n.inputs.assign( rhs.begin() + 1, rhs.end() );
    if ( n.inputs.size() != arity_in( n.kind ) || out_names.size() != arity_out( n.kind ) )
    {
      detail::parse_fail( number, "gate " + rhs.front() + " takes " + std::to_string( arity_in( n.kind ) ) +
                                      " inputs and drives " + std::to_string( arity_out( n.kind ) ) + " outputs" );
    }
    for ( auto const& o : out_names )
    {
      n.outputs.push_back( declare( o, number ) );
    }
    raw.push_back( std::move( n ) );
  }

  std::vector<wire_id> outputs;
  for ( std::size_t k = 1; k < tail.size(); ++k )
  {
    auto const it = ids.find( tail[k] );
    if ( it == ids.end() )
    {
      detail::parse_fail( lines.back().number, "output wire '" + tail[k] + "' is never driven" );
    }
    outputs.push_back( it->second );
  }

  // Kahn-style ordering: repeatedly emit nodes whose inputs are all driven.
  std::vector<std::vector<wire_id>> resolved( raw.size() );
  for ( std::size_t i = 0; i < raw.size(); ++i )
  {
    for ( auto const& name : raw[i].inputs )
    {
      auto const it = ids.find( name );
      if ( it == ids.end() )
      {
        throw structural_error( "line " + std::to_string( raw[i].line ) + ": wire '" + name + "' is never driven",
                                i );
      }
      resolved[i].push_back( it->second );
    }
  }
  std::vector<bool> ready( names.size(), false );
  for ( auto w : inputs )
  {
    ready[w] = true;
  }
  std::vector<node> sorted;
  std::vector<bool> placed( raw.size(), false );
  bool progress = true;
  while ( sorted.size() < raw.size() && progress )
  {
    progress = false;
    for ( std::size_t i = 0; i < raw.size(); ++i )
    {
      if ( placed[i] )
      {
        continue;
      }
      if ( std::all_of( resolved[i].begin(), resolved[i].end(), [&]( wire_id w ) { return ready[w]; } ) )
      {
        placed[i] = true;
        progress = true;
        sorted.push_back( node{ raw[i].kind, resolved[i], raw[i].outputs } );
        for ( auto w : raw[i].outputs )
        {
          ready[w] = true;
        }
      }
    }
  }
  if ( sorted.size() < raw.size() )
  {
    auto const stuck = static_cast<std::size_t>( std::find( placed.begin(), placed.end(), false ) - placed.begin() );
    throw structural_error( "line " + std::to_string( raw[stuck].line ) + ": combinational cycle", stuck );
  }

  return netlist_builder<GateSet>::from_parts( std::move( names ), std::move( inputs ), std::move( sorted ),
                                               std::move( outputs ) );
}

template<class GateSet>
netlist<GateSet> read_netlist_string( std::string const& text )
{
  std::istringstream is( text );
  return read_netlist<GateSet>( is );
}

template<class GateSet>
netlist<GateSet> read_netlist_file( std::string const& path )
{
  std::ifstream is( path );
  if ( !is )
  {
    throw error( "cannot open '" + path + "'" );
  }
  return read_netlist<GateSet>( is );
}

/*! \brief Writes `c`; each entry of `comments` becomes a `# ...` line right after the inputs line. */
template<class GateSet>
void write_netlist( std::ostream& os, netlist<GateSet> const& c, std::vector<std::string> const& comments = {} )
{
  os << "inputs";
  for ( auto w : c.inputs() )
  {
    os << ' ' << c.wire_name( w );
  }
  os << '\n';
  for ( auto const& line : comments )
  {
    os << "# " << line << '\n';
  }
  for ( auto const& n : c.nodes() )
  {
    for ( std::size_t k = 0; k < n.outputs.size(); ++k )
    {
      os << ( k ? "," : "" ) << c.wire_name( n.outputs[k] );
    }
    os << " = " << gate_name( n.kind );
    for ( auto w : n.inputs )
    {
      os << ' ' << c.wire_name( w );
    }
    os << '\n';
  }
  os << "outputs";
  for ( auto w : c.outputs() )
  {
    os << ' ' << c.wire_name( w );
  }
  os << '\n';
}

template<class GateSet>
std::string to_string( netlist<GateSet> const& c )
{
  std::ostringstream os;
  write_netlist( os, c );
  return os.str();
}

/*! \brief Writes `basis n_in n_out` and one row per basis word in lexicographic order. */
inline void write_basis_table( std::ostream& os, basis_table const& t )
{
  os << "basis " << t.n_in() << ' ' << t.n_out() << '\n';
  for ( std::uint64_t r = 0; r < t.rows().size(); ++r )
  {
    os << word_from_basis_index( r, t.n_in() ) << ' ' << t.row( r ) << '\n';
  }
}

/*! \brief Writes `full n_in n_out` and all 3^n rows in lexicographic order. */
inline void write_full_table( std::ostream& os, full_table const& t )
{
  os << "full " << t.n_in << ' ' << t.n_out << '\n';
  for ( std::uint64_t r = 0; r < t.rows.size(); ++r )
  {
    os << word_from_ternary_index( r, t.n_in ) << ' ' << t.rows[r] << '\n';
  }
}

namespace detail
{

struct table_text
{
  std::string kind;
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  std::vector<text_line> rows;
};

inline table_text read_table_text( std::istream& is )
{
  auto lines = content_lines( is );
  if ( lines.empty() )
  {
    throw malformed_operand( "empty table file" );
  }
  auto const head = split_ws( lines.front().text );
  table_text out;
  try
  {
    if ( head.size() != 3 )
    {
      throw std::invalid_argument( "header" );
    }
    out.kind = head[0];
    out.n_in = std::stoul( head[1] );
    out.n_out = std::stoul( head[2] );
  }
  catch ( std::logic_error const& )
  {
    throw malformed_operand( "line " + std::to_string( lines.front().number ) +
                             ": expected header '<basis|full> n_in n_out'" );
  }
  if ( out.n_in == 0 || out.n_out == 0 )
  {
    throw malformed_operand( "table widths must be >= 1" );
  }
  out.rows.assign( lines.begin() + 1, lines.end() );
  return out;
}

/* Parses rows into a map from key index to value; `index_of` maps a key word to its slot. */
template<class IndexOf>
std::vector<std::optional<sbit_word>> read_rows( table_text const& t, std::uint64_t slots, IndexOf&& index_of )
{
  std::vector<std::optional<sbit_word>> values( slots );
  for ( auto const& [number, text] : t.rows )
  {
    auto const parts = split_ws( text );
    if ( parts.size() != 2 )
    {
      throw malformed_operand( "line " + std::to_string( number ) + ": expected '<input-word> <output-word>'" );
    }
    sbit_word const key( parts[0] );
    sbit_word value( parts[1] );
    if ( key.size() != t.n_in || value.size() != t.n_out )
    {
      throw malformed_operand( "line " + std::to_string( number ) + ": row widths do not match the header" );
    }
    auto const idx = index_of( key, number );
    if ( values[idx] )
    {
      throw malformed_operand( "line " + std::to_string( number ) + ": duplicate row for " + key.to_string() );
    }
    values[idx] = std::move( value );
  }
  return values;
}

} // namespace detail

inline basis_table read_basis_table( std::istream& is )
{
  auto const t = detail::read_table_text( is );
  if ( t.kind != "basis" )
  {
    throw malformed_operand( "expected a 'basis' table header" );
  }
  if ( t.n_in > 24 )
  {
    throw cap_exceeded( t.n_in, 24, '2' );
  }
  auto values = detail::read_rows( t, std::uint64_t{ 1 } << t.n_in, []( sbit_word const& key, std::size_t line ) {
    if ( !key.is_basis() )
    {
      throw malformed_operand( "line " + std::to_string( line ) + ": basis table keys may not contain s" );
    }
    return basis_index( key );
  } );
  std::vector<sbit_word> rows;
  for ( std::uint64_t r = 0; r < values.size(); ++r )
  {
    if ( !values[r] )
    {
      throw malformed_operand( "missing row for " + word_from_basis_index( r, t.n_in ).to_string() );
    }
    rows.push_back( std::move( *values[r] ) );
  }
  return basis_table( t.n_in, t.n_out, std::move( rows ) );
}

inline full_table read_full_table( std::istream& is )
{
  auto const t = detail::read_table_text( is );
  if ( t.kind != "full" )
  {
    throw malformed_operand( "expected a 'full' table header" );
  }
  if ( t.n_in > 16 )
  {
    throw cap_exceeded( t.n_in, 16, '3' );
  }
  auto values = detail::read_rows( t, pow3( t.n_in ),
                                   []( sbit_word const& key, std::size_t ) { return ternary_index( key ); } );
  full_table out{ t.n_in, t.n_out, {} };
  for ( std::uint64_t r = 0; r < values.size(); ++r )
  {
    if ( !values[r] )
    {
      throw malformed_operand( "missing row for " + word_from_ternary_index( r, t.n_in ).to_string() );
    }
    out.rows.push_back( std::move( *values[r] ) );
  }
  return out;
}

} // namespace sbitlab
