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


#include <gtest/gtest.h>

#include "oracles.hpp"

#include <sstream>

using namespace sbitlab;

namespace
{

char const* const mixed = R"(# (x1 OR NOT x2) AND C0 x3
inputs x1 x2 x3
n2 = NOT x2
a = OR x1 n2
z = C0 x3
y = AND a z
outputs y
)";

template<class G = ternary_gates>
std::optional<std::size_t> structural_node( std::string const& text )
{
  try
  {
    read_netlist_string<G>( text );
  }
  catch ( structural_error const& e )
  {
    return e.node().value_or( 999 );
  }
  return std::nullopt;
}

} // namespace

TEST( Netlist, ParseEvalAndCount )
{
  auto const c = read_netlist_string<ternary_gates>( mixed );
  EXPECT_EQ( c.num_inputs(), 3u );
  EXPECT_EQ( c.gate_count(), 4u );
  EXPECT_EQ( eval( c, sbit_word( "110" ) ), sbit_word( "0" ) );
  for ( auto const& w : all_words( 3 ) )
  {
    EXPECT_EQ( eval( c, w ).to_string(), oracle::eval( c, w.to_string() ) );
  }
  EXPECT_THROW( eval( c, sbit_word( "11" ) ), arity_error );
}

TEST( Netlist, SingleGateAndWire )
{
  auto const n = read_netlist_string<ternary_gates>( "inputs x\ny = NOT x\noutputs y\n" );
  EXPECT_EQ( eval( n, sbit_word( "s" ) ), sbit_word( "s" ) );
  auto const wire = read_netlist_string<ternary_gates>( "inputs a b\noutputs b a\n" );
  EXPECT_EQ( wire.gate_count(), 0u );
  EXPECT_EQ( eval( wire, sbit_word( "1s" ) ), sbit_word( "s1" ) );
}

TEST( Netlist, BodyOrderDoesNotMatter )
{
  auto const shuffled = read_netlist_string<ternary_gates>( "inputs x1 x2 x3\n"
                                                            "y = AND a z\n"
                                                            "z = C0 x3\n"
                                                            "a = OR x1 n2\n"
                                                            "n2 = NOT x2\n"
                                                            "outputs y\n" );
  auto const ordered = read_netlist_string<ternary_gates>( mixed );
  for ( auto const& w : all_words( 3 ) )
  {
    EXPECT_EQ( eval( shuffled, w ), eval( ordered, w ) );
  }
}

TEST( Netlist, WriteReadRoundTrip )
{
  auto const c = read_netlist_string<ternary_gates>( mixed );
  auto const again = read_netlist_string<ternary_gates>( to_string( c ) );
  EXPECT_EQ( c, again );
  EXPECT_EQ( to_string( c ), to_string( again ) );
}

TEST( Netlist, StructuralErrors )
{
  // wire used twice
  EXPECT_TRUE( structural_node( "inputs x\ny = AND x x\noutputs y\n" ) );
  // dangling output of a FANOUT
  EXPECT_TRUE( structural_node( "inputs x\na,b = FANOUT x\noutputs a\n" ) );
  // unused input
  EXPECT_THROW( read_netlist_string<ternary_gates>( "inputs x y\nz = NOT x\noutputs z\n" ), structural_error );
  // cycle
  EXPECT_TRUE( structural_node( "inputs x\na = AND x b\nb = NOT a\noutputs b\n" ) );
  // undefined wire
  EXPECT_THROW( read_netlist_string<ternary_gates>( "inputs x\ny = NOT q\noutputs y\n" ), structural_error );
  // wire driven twice
  EXPECT_THROW( read_netlist_string<ternary_gates>( "inputs x\nx = NOT x\noutputs x\n" ), structural_error );
  // arity and unknown gates
  EXPECT_THROW( read_netlist_string<ternary_gates>( "inputs x\ny = AND x\noutputs y\n" ), structural_error );
  EXPECT_THROW( read_netlist_string<ternary_gates>( "inputs x\ny = NAND x\noutputs y\n" ), structural_error );
  // missing header or trailer
  EXPECT_THROW( read_netlist_string<ternary_gates>( "y = NOT x\noutputs y\n" ), structural_error );
  EXPECT_THROW( read_netlist_string<ternary_gates>( "inputs x\ny = NOT x\n" ), structural_error );
}

TEST( Netlist, DoubleUseNamesTheNode )
{
  auto const node = structural_node( "inputs x y\na = NOT x\nb = AND a y\nc = OR b a\noutputs c\n" );
  ASSERT_TRUE( node );
  EXPECT_EQ( *node, 2u );
}

TEST( Netlist, GateSetIsEnforced )
{
  EXPECT_THROW( read_netlist_string<classical_gates>( "inputs x\ny = C0 x\noutputs y\n" ), structural_error );
  EXPECT_THROW( read_netlist_string<boolean_gates>( "inputs x y\nz = XOR x y\noutputs z\n" ), structural_error );
  EXPECT_NO_THROW( read_netlist_string<classical_gates>( "inputs x y\nz = XOR x y\noutputs z\n" ) );
}

TEST( Netlist, BuilderMatchesParser )
{
  netlist_builder<ternary_gates> b;
  auto const x1 = b.input( "x1" );
  auto const x2 = b.input( "x2" );
  auto const x3 = b.input( "x3" );
  auto const a = b.add1( gate_kind::or_, { x1, b.add1( gate_kind::not_, { x2 } ) } );
  b.output( b.add1( gate_kind::and_, { a, b.add1( gate_kind::c0, { x3 } ) } ) );
  auto const c = std::move( b ).build();
  auto const parsed = read_netlist_string<ternary_gates>( mixed );
  for ( auto const& w : all_words( 3 ) )
  {
    EXPECT_EQ( eval( c, w ), eval( parsed, w ) );
  }
}

TEST( Netlist, BooleanEval )
{
  auto const c = read_netlist_string<classical_gates>( "inputs a b\nz = XOR a b\noutputs z\n" );
  EXPECT_EQ( eval_boolean( c, { true, false } ), std::vector<bool>{ true } );
  EXPECT_EQ( eval_boolean( c, { true, true } ), std::vector<bool>{ false } );
}

TEST( Tables, BasisTableTextRoundTrip )
{
  auto const t = random_basis_table( 3, 2, 11 );
  std::stringstream ss;
  write_basis_table( ss, t );
  EXPECT_EQ( read_basis_table( ss ), t );
}

TEST( Tables, FullTableTextRoundTrip )
{
  auto const t = gate_full_table( gate_kind::xor_ );
  std::stringstream ss;
  write_full_table( ss, t );
  auto const back = read_full_table( ss );
  EXPECT_EQ( back.rows, t.rows );
}

TEST( Tables, MalformedTablesAreRejected )
{
  std::istringstream missing( "basis 1 1\n0 1\n" );
  EXPECT_THROW( read_basis_table( missing ), malformed_operand );
  std::istringstream s_key( "basis 1 1\n0 1\ns 0\n" );
  EXPECT_THROW( read_basis_table( s_key ), malformed_operand );
  std::istringstream dup( "basis 1 1\n0 1\n0 1\n1 0\n" );
  EXPECT_THROW( read_basis_table( dup ), malformed_operand );
}
