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
  \file netlist.hpp
  \brief Single-use-wire netlist IR shared by ternary, classical and Boolean circuits.

  A netlist is a list of gate nodes in topological order over named wires.
  Every wire has exactly one driver (a primary input or a node output) and
  exactly one consumer (a node input or a primary output); duplication only
  happens through explicit FANOUT nodes.  The gate set is a compile-time
  policy, so a classical circuit cannot silently contain an S0 gate.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "gates.hpp"
#include "sbit.hpp"

namespace sbitlab
{

using wire_id = std::uint32_t;

struct node
{
  gate_kind kind;
  std::vector<wire_id> inputs;
  std::vector<wire_id> outputs;

  friend bool operator==( node const&, node const& ) = default;
};

/*! \brief Gate-set policy: every gate. */
struct ternary_gates
{
  static constexpr std::string_view name = "ternary";
  static constexpr bool allows( gate_kind ) noexcept { return true; }
};

/*! \brief Gate-set policy: the classical source language of the lowering pass. */
struct classical_gates
{
  static constexpr std::string_view name = "classical";
  static constexpr bool allows( gate_kind g ) noexcept
  {
    return g == gate_kind::and_ || g == gate_kind::or_ || g == gate_kind::not_ || g == gate_kind::xor_ ||
           g == gate_kind::fanout;
  }
};

/*! \brief Gate-set policy: the pure Boolean target of the dual-rail backend. */
struct boolean_gates
{
  static constexpr std::string_view name = "boolean";
  static constexpr bool allows( gate_kind g ) noexcept
  {
    return g == gate_kind::and_ || g == gate_kind::or_ || g == gate_kind::not_ || g == gate_kind::fanout ||
           g == gate_kind::const0 || g == gate_kind::const1;
  }
};

inline bool is_valid_wire_name( std::string_view name ) noexcept
{
  if ( name.empty() )
  {
    return false;
  }
  auto const head = static_cast<unsigned char>( name.front() );
  if ( !( std::isalpha( head ) || head == '_' ) )
  {
    return false;
  }
  return std::all_of( name.begin() + 1, name.end(), []( char c ) {
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_';
  } );
}

template<class GateSet>
class netlist_builder;

template<class GateSet>
class netlist
{
public:
  using gate_set = GateSet;

  std::size_t num_inputs() const noexcept { return inputs_.size(); }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }
  std::size_t num_wires() const noexcept { return names_.size(); }

  /*! \brief Number of gate nodes, FANOUTs included. */
  std::size_t gate_count() const noexcept { return nodes_.size(); }

  std::span<wire_id const> inputs() const noexcept { return inputs_; }
  std::span<wire_id const> outputs() const noexcept { return outputs_; }
  std::span<node const> nodes() const noexcept { return nodes_; }
  std::string const& wire_name( wire_id w ) const { return names_.at( w ); }

  friend bool operator==( netlist const&, netlist const& ) = default;

private:
  friend class netlist_builder<GateSet>;

  netlist( std::vector<std::string> names, std::vector<wire_id> inputs, std::vector<node> nodes,
           std::vector<wire_id> outputs )
      : names_( std::move( names ) ), inputs_( std::move( inputs ) ), nodes_( std::move( nodes ) ),
        outputs_( std::move( outputs ) )
  {
    validate();
  }

  void validate() const
  {
    if ( inputs_.empty() )
    {
      throw structural_error( "netlist needs at least one input" );
    }
    if ( outputs_.empty() )
    {
      throw structural_error( "netlist needs at least one output" );
    }
    std::unordered_set<std::string_view> seen;
    for ( auto const& n : names_ )
    {
      if ( !is_valid_wire_name( n ) )
      {
        throw structural_error( "invalid wire name '" + n + "'" );
      }
      if ( !seen.insert( n ).second )
      {
        throw structural_error( "wire '" + n + "' declared twice" );
      }
    }

    auto const wires = names_.size();
    std::vector<bool> driven( wires, false );
    std::vector<std::uint32_t> uses( wires, 0 );
    std::vector<std::optional<std::size_t>> driver( wires );
    auto check_id = [&]( wire_id w, std::optional<std::size_t> node_id ) {
      if ( w >= wires )
      {
        throw structural_error( "unknown wire id " + std::to_string( w ), node_id );
      }
    };
    auto drive = [&]( wire_id w, std::optional<std::size_t> node_id ) {
      check_id( w, node_id );
      if ( driven[w] )
      {
        throw structural_error( "wire '" + names_[w] + "' has more than one driver", node_id );
      }
      driven[w] = true;
      driver[w] = node_id;
    };
    auto use = [&]( wire_id w, std::optional<std::size_t> node_id ) {
      if ( ++uses[w] > 1 )
      {
        throw structural_error( "wire '" + names_[w] + "' is used more than once; duplicate it with FANOUT", node_id );
      }
    };

    for ( auto w : inputs_ )
    {
      drive( w, std::nullopt );
    }
    for ( std::size_t i = 0; i < nodes_.size(); ++i )
    {
      auto const& n = nodes_[i];
      if ( !GateSet::allows( n.kind ) )
      {
        throw structural_error( "gate " + std::string( gate_name( n.kind ) ) + " is not part of the " +
                                    std::string( GateSet::name ) + " gate set",
                                i );
      }
      if ( n.inputs.size() != arity_in( n.kind ) || n.outputs.size() != arity_out( n.kind ) )
      {
        throw structural_error( "gate " + std::string( gate_name( n.kind ) ) + " arity mismatch", i );
      }
      for ( auto w : n.inputs )
      {
        check_id( w, i );
        if ( !driven[w] )
        {
          throw structural_error( "wire '" + names_[w] + "' is read before it is driven (cycle or undriven wire)", i );
        }
        use( w, i );
      }
      for ( auto w : n.outputs )
      {
        drive( w, i );
      }
    }
    for ( auto w : outputs_ )
    {
      check_id( w, std::nullopt );
      if ( !driven[w] )
      {
        throw structural_error( "output wire '" + names_[w] + "' is never driven" );
      }
      use( w, std::nullopt );
    }
    for ( wire_id w = 0; w < wires; ++w )
    {
      if ( !driven[w] )
      {
        throw structural_error( "wire '" + names_[w] + "' is never driven" );
      }
      if ( uses[w] == 0 )
      {
        throw structural_error( "dangling wire '" + names_[w] + "'", driver[w] );
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<wire_id> inputs_;
  std::vector<node> nodes_;
  std::vector<wire_id> outputs_;
};

using ternary_circuit = netlist<ternary_gates>;
using classical_circuit = netlist<classical_gates>;
using boolean_circuit = netlist<boolean_gates>;

/*! \brief Incremental construction of a netlist; `build()` validates. */
template<class GateSet>
class netlist_builder
{
public:
  wire_id input( std::string name = {} )
  {
    auto const w = new_wire( std::move( name ) );
    inputs_.push_back( w );
    return w;
  }

  std::vector<wire_id> add( gate_kind g, std::span<wire_id const> inputs, std::vector<std::string> output_names = {} )
  {
    node n{ g, std::vector<wire_id>( inputs.begin(), inputs.end() ), {} };
    for ( std::size_t j = 0; j < arity_out( g ); ++j )
    {
      n.outputs.push_back( new_wire( j < output_names.size() ? std::move( output_names[j] ) : std::string{} ) );
    }
    auto outs = n.outputs;
    nodes_.push_back( std::move( n ) );
    return outs;
  }

  std::vector<wire_id> add( gate_kind g, std::initializer_list<wire_id> inputs )
  {
    return add( g, std::span<wire_id const>( inputs.begin(), inputs.size() ) );
  }

  /*! \brief Adds a single-output gate and returns its output wire. */
  wire_id add1( gate_kind g, std::initializer_list<wire_id> inputs, std::string output_name = {} )
  {
    std::vector<std::string> names;
    if ( !output_name.empty() )
    {
      names.push_back( std::move( output_name ) );
    }
    return add( g, std::span<wire_id const>( inputs.begin(), inputs.size() ), std::move( names ) ).front();
  }

  /*! \brief FANOUT shorthand. */
  std::array<wire_id, 2> fanout( wire_id w )
  {
    auto const outs = add( gate_kind::fanout, { w } );
    return { outs[0], outs[1] };
  }

  void output( wire_id w ) { outputs_.push_back( w ); }

  /*! \brief Copies `sub` into this netlist, feeding its inputs from `inputs`; returns its output wires. */
  template<class SubGates>
  std::vector<wire_id> embed( netlist<SubGates> const& sub, std::span<wire_id const> inputs )
  {
    if ( inputs.size() != sub.num_inputs() )
    {
      throw arity_error( "embed: wrong number of input wires" );
    }
    std::vector<wire_id> map( sub.num_wires(), wire_id( -1 ) );
    for ( std::size_t k = 0; k < inputs.size(); ++k )
    {
      map[sub.inputs()[k]] = inputs[k];
    }
    for ( auto const& n : sub.nodes() )
    {
      std::vector<wire_id> ins;
      for ( auto w : n.inputs )
      {
        ins.push_back( map[w] );
      }
      auto const outs = add( n.kind, ins );
      for ( std::size_t j = 0; j < outs.size(); ++j )
      {
        map[n.outputs[j]] = outs[j];
      }
    }
    std::vector<wire_id> result;
    for ( auto w : sub.outputs() )
    {
      result.push_back( map[w] );
    }
    return result;
  }

  netlist<GateSet> build() &&
  {
    return netlist<GateSet>( std::move( names_ ), std::move( inputs_ ), std::move( nodes_ ), std::move( outputs_ ) );
  }

  /*! \brief Builds from explicit parts; used by the parser after it has sorted the nodes. */
  static netlist<GateSet> from_parts( std::vector<std::string> names, std::vector<wire_id> inputs,
                                      std::vector<node> nodes, std::vector<wire_id> outputs )
  {
    return netlist<GateSet>( std::move( names ), std::move( inputs ), std::move( nodes ), std::move( outputs ) );
  }

private:
  wire_id new_wire( std::string name )
  {
    if ( name.empty() )
    {
      do
      {
        name = "w" + std::to_string( counter_++ );
      } while ( used_.count( name ) );
    }
    else if ( used_.count( name ) )
    {
      throw structural_error( "wire '" + name + "' declared twice" );
    }
    used_.insert( name );
    names_.push_back( std::move( name ) );
    return static_cast<wire_id>( names_.size() - 1 );
  }

  std::vector<std::string> names_;
  std::unordered_set<std::string> used_;
  std::vector<wire_id> inputs_;
  std::vector<node> nodes_;
  std::vector<wire_id> outputs_;
  std::size_t counter_ = 0;
};

/*! \brief Gate-local ternary evaluation into caller-provided buffers.
 *
 * `scratch` is resized to the wire count; reusing it across calls avoids
 * allocation in sweeps.
 */
template<class GateSet>
void eval_into( netlist<GateSet> const& c, std::span<sbit const> in, std::span<sbit> out, std::vector<sbit>& scratch )
{
  scratch.assign( c.num_wires(), sbit::zero );
  for ( std::size_t k = 0; k < in.size(); ++k )
  {
    scratch[c.inputs()[k]] = in[k];
  }
  std::array<sbit, 3> ins{};
  std::array<sbit, 2> outs{};
  for ( auto const& n : c.nodes() )
  {
    for ( std::size_t k = 0; k < n.inputs.size(); ++k )
    {
      ins[k] = scratch[n.inputs[k]];
    }
    apply_gate( n.kind, std::span<sbit const>( ins.data(), n.inputs.size() ),
                std::span<sbit>( outs.data(), n.outputs.size() ) );
    for ( std::size_t k = 0; k < n.outputs.size(); ++k )
    {
      scratch[n.outputs[k]] = outs[k];
    }
  }
  for ( std::size_t k = 0; k < out.size(); ++k )
  {
    out[k] = scratch[c.outputs()[k]];
  }
}

/*! \brief Gate-local semantics: propagates ternary values through the nodes in order. */
template<class GateSet>
sbit_word eval( netlist<GateSet> const& c, sbit_word const& in )
{
  if ( in.size() != c.num_inputs() )
  {
    throw arity_error( "circuit has " + std::to_string( c.num_inputs() ) + " inputs, word has width " +
                       std::to_string( in.size() ) );
  }
  std::vector<sbit> scratch;
  std::vector<sbit> out( c.num_outputs() );
  eval_into( c, in.symbols(), out, scratch );
  return sbit_word( std::move( out ) );
}

/*! \brief Reads the netlist as Boolean logic and evaluates it on 0/1 inputs. */
template<class GateSet>
std::vector<bool> eval_boolean( netlist<GateSet> const& c, std::vector<bool> const& in )
{
  if ( in.size() != c.num_inputs() )
  {
    throw arity_error( "circuit has " + std::to_string( c.num_inputs() ) + " inputs, got " +
                       std::to_string( in.size() ) + " bits" );
  }
  std::vector<bool> values( c.num_wires(), false );
  for ( std::size_t k = 0; k < in.size(); ++k )
  {
    values[c.inputs()[k]] = in[k];
  }
  std::array<bool, 3> ins{};
  std::array<bool, 2> outs{};
  for ( auto const& n : c.nodes() )
  {
    for ( std::size_t k = 0; k < n.inputs.size(); ++k )
    {
      ins[k] = values[n.inputs[k]];
    }
    boolean_apply( n.kind, std::span<bool const>( ins.data(), n.inputs.size() ),
                   std::span<bool>( outs.data(), n.outputs.size() ) );
    for ( std::size_t k = 0; k < n.outputs.size(); ++k )
    {
      values[n.outputs[k]] = outs[k];
    }
  }
  std::vector<bool> out;
  out.reserve( c.num_outputs() );
  for ( auto w : c.outputs() )
  {
    out.push_back( values[w] );
  }
  return out;
}

/*! \brief Copies a netlist into a wider gate set.  Wire names are preserved. */
template<class To, class From>
netlist<To> widen( netlist<From> const& c )
{
  std::vector<std::string> names;
  for ( wire_id w = 0; w < c.num_wires(); ++w )
  {
    names.push_back( c.wire_name( w ) );
  }
  return netlist_builder<To>::from_parts( std::move( names ), { c.inputs().begin(), c.inputs().end() },
                                          { c.nodes().begin(), c.nodes().end() },
                                          { c.outputs().begin(), c.outputs().end() } );
}

} // namespace sbitlab
