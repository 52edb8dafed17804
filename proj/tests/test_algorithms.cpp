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

using namespace sbitlab;

namespace
{

ternary_circuit parse( char const* text ) { return read_netlist_string<ternary_gates>( text ); }

} // namespace

TEST( Deutsch, OneSbitCircuits )
{
  auto const c0 = deutsch_classify( parse( "inputs x\ny = C0 x\noutputs y\n" ) );
  EXPECT_EQ( c0.classification, dj_class::constant0 );
  EXPECT_EQ( c0.queries, 1u );
  EXPECT_EQ( deutsch_classify( parse( "inputs x\ny = C1 x\noutputs y\n" ) ).classification, dj_class::constant1 );
  EXPECT_EQ( deutsch_classify( parse( "inputs x\noutputs x\n" ) ).classification, dj_class::nonconstant );
  EXPECT_EQ( deutsch_classify( parse( "inputs x\ny = NOT x\noutputs y\n" ) ).classification, dj_class::nonconstant );
}

TEST( Deutsch, BuilderFamilies )
{
  EXPECT_EQ( deutsch_classify( constant_circuit( 8, sbit::zero ) ).classification, dj_class::constant0 );
  EXPECT_EQ( deutsch_classify( constant_circuit( 3, sbit::one ) ).classification, dj_class::constant1 );
  auto const p = deutsch_classify( projection_circuit( 4, 1 ) );
  EXPECT_EQ( p.classification, dj_class::nonconstant );
  EXPECT_EQ( p.queries, 1u );
}

TEST( Deutsch, RejectsNonWadditiveOracleUnlessTold )
{
  auto const bad = parse( "inputs x\np,q = FANOUT x\nnq = NOT q\ny = AND p nq\noutputs y\n" );
  EXPECT_THROW( deutsch_classify( bad ), inconsistency_error );
  // unchecked, the duplicated wire misreports a constant function
  EXPECT_EQ( deutsch_classify( bad, { .verify = false } ).classification, dj_class::nonconstant );
  EXPECT_THROW( deutsch_classify( parse( "inputs x\na,b = FANOUT x\noutputs a b\n" ) ), arity_error );
}

TEST( Deutsch, RandomBooleanTables )
{
  int constants = 0;
  for ( std::uint64_t seed = 0; seed < 80; ++seed )
  {
    std::size_t const n = 1 + seed % 3;
    auto t = random_boolean_table( n, 1, seed );
    if ( seed % 4 == 0 )
    {
      // force some constant tables into the sample
      t = basis_table( n, 1, std::vector<sbit_word>( std::size_t{ 1 } << n, sbit_word{ from_bool( seed % 8 == 0 ) } ) );
    }
    bool const constant = std::all_of( t.rows().begin(), t.rows().end(), [&]( auto const& r ) { return r == t.row( 0 ); } );
    constants += constant;
    auto const r = deutsch_classify( synthesize( t ) );
    EXPECT_EQ( r.queries, 1u );
    EXPECT_EQ( r.classification != dj_class::nonconstant, constant ) << seed;
    if ( constant )
    {
      EXPECT_EQ( r.classification, t.row( 0 )[0] == sbit::one ? dj_class::constant1 : dj_class::constant0 );
    }
  }
  EXPECT_GT( constants, 10 );
}

TEST( Builders, SizesAndTables )
{
  for ( std::size_t n = 1; n <= 16; ++n )
  {
    EXPECT_EQ( oracle_circuit( sbit_word::filled( n, sbit::one ) ).gate_count(), 2 * n - 1 );
    EXPECT_EQ( constant_circuit( n, sbit::zero ).gate_count(), 2 * n - 1 );
    EXPECT_EQ( projection_circuit( n, 1 ).gate_count(), n == 1 ? 0 : 2 * n - 2 );
  }
  EXPECT_EQ( oracle_circuit( sbit_word( "010011" ) ).gate_count(), 11u );
  auto const o = oracle_circuit( sbit_word( "11" ) );
  EXPECT_EQ( basis_table_of( o ).rows(),
             ( std::vector<sbit_word>{ sbit_word( "0" ), sbit_word( "0" ), sbit_word( "0" ), sbit_word( "1" ) } ) );
  auto const single = oracle_circuit( sbit_word( "0" ) );
  ASSERT_EQ( single.gate_count(), 1u );
  EXPECT_EQ( single.nodes()[0].kind, gate_kind::not_ );
  EXPECT_THROW( oracle_circuit( sbit_word( "0s" ) ), malformed_operand );
  EXPECT_THROW( projection_circuit( 3, 4 ), malformed_operand );
}

TEST( Builders, OraclesMarkExactlyTheirWord )
{
  for ( std::size_t n = 1; n <= 4; ++n )
  {
    for ( auto const& a : all_basis_words( n ) )
    {
      auto const c = oracle_circuit( a );
      EXPECT_TRUE( check_circuit( c ).wadditive() );
      for ( auto const& x : all_basis_words( n ) )
      {
        EXPECT_EQ( eval( c, x )[0], from_bool( x == a ) );
      }
    }
  }
}

TEST( Builders, ProjectionSelectsInput )
{
  for ( std::size_t n = 1; n <= 5; ++n )
  {
    for ( std::size_t j = 1; j <= n; ++j )
    {
      auto const c = projection_circuit( n, j );
      EXPECT_TRUE( check_circuit( c ).wadditive() );
      for ( auto const& x : all_basis_words( n ) )
      {
        EXPECT_EQ( eval( c, x )[0], x[j - 1] );
      }
    }
  }
}

TEST( Search, KnownCases )
{
  auto const r = search( oracle_circuit( sbit_word( "101" ) ), 3 );
  EXPECT_EQ( r.found, sbit_word( "101" ) );
  EXPECT_EQ( r.queries, 3u );
  // decode path: probes with 0 at a 1-position come back 0, the rest s
  EXPECT_EQ( r.probe_outputs, ( std::vector{ sbit::zero, sbit::s, sbit::zero } ) );

  auto const one = search( oracle_circuit( sbit_word( "0" ) ), 1 );
  EXPECT_EQ( one.found, sbit_word( "0" ) );
  EXPECT_EQ( one.probe_outputs[0], sbit::one );
}

TEST( Search, ProbesAgreeWithBruteForce )
{
  for ( auto const& a : all_basis_words( 4 ) )
  {
    auto const c = oracle_circuit( a );
    auto const r = search( c, 4 );
    EXPECT_EQ( r.found, a );
    for ( std::size_t j = 0; j < 4; ++j )
    {
      auto probe = std::string( 4, 's' );
      probe[j] = '0';
      EXPECT_EQ( to_char( r.probe_outputs[j] ), oracle::eval( c, probe )[0] );
    }
  }
}

TEST( Search, DetectsOraclesOutsideThePromise )
{
  EXPECT_THROW( search( constant_circuit( 3, sbit::zero ), 3 ), inconsistency_error );
  EXPECT_THROW( search( oracle_circuit( sbit_word( "10" ) ), 3 ), arity_error );
}
