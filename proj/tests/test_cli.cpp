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

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace
{

struct result
{
  int code;
  std::string out;
  std::string err;
};

result run( std::vector<std::string> args )
{
  args.insert( args.begin(), "sbitlab" );
  std::vector<char const*> argv;
  for ( auto const& a : args )
  {
    argv.push_back( a.c_str() );
  }
  std::ostringstream out;
  std::ostringstream err;
  auto const code = sbitlab::cli::run( static_cast<int>( argv.size() ), argv.data(), out, err );
  return { code, out.str(), err.str() };
}

std::string net( char const* name ) { return std::string( SBITLAB_NETLISTS ) + "/" + name; }

std::string temp_file( std::string const& name, std::string const& text )
{
  auto const path = ( std::filesystem::temp_directory_path() / name ).string();
  std::ofstream( path ) << text;
  return path;
}

} // namespace

TEST( Cli, CheckWaddOnConvertedExample )
{
  auto const r = run( { "check-wadd", net( "and_or_wadditive.net" ) } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( r.out, "WADDITIVE gates=4\n" );
}

TEST( Cli, CheckWaddViolation )
{
  auto const r = run( { "check-wadd", net( "x_and_not_x.net" ) } );
  EXPECT_EQ( r.code, 1 );
  EXPECT_EQ( r.out, "VIOLATION witness=s gates=3\n" );
}

TEST( Cli, CheckWaddOnFullTables )
{
  auto const good = run( { "table", "XOR", "--full" } );
  EXPECT_EQ( run( { "check-wadd", temp_file( "sbitlab_xor.full", good.out ) } ).out, "WADDITIVE rows=9\n" );
  auto const bad = temp_file( "sbitlab_bad.full", "full 2 1\n00 0\n01 1\n0s s\n10 0\n11 0\n1s 0\ns0 0\ns1 s\nss 0\n" );
  auto const r = run( { "check-wadd", bad } );
  EXPECT_EQ( r.code, 1 );
  EXPECT_EQ( r.out, "VIOLATION witness=ss rows=9\n" );
}

TEST( Cli, EvalNot )
{
  auto const r = run( { "eval", net( "not.net" ), "s" } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( r.out, "s\n" );
  EXPECT_EQ( run( { "eval", net( "not.net" ), "2" } ).code, 2 );
  EXPECT_EQ( run( { "eval", net( "not.net" ), "01" } ).code, 2 );
}

TEST( Cli, SearchOracle )
{
  auto const gen = run( { "oracle-gen", "101" } );
  ASSERT_EQ( gen.code, 0 );
  auto const r = run( { "search", temp_file( "sbitlab_oracle.net", gen.out ), "--n", "3" } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( r.out, "FOUND 101 queries=3\n" );
}

TEST( Cli, DeutschVerdicts )
{
  EXPECT_EQ( run( { "dj", net( "const0.net" ) } ).out, "CONSTANT0 queries=1\n" );
  EXPECT_EQ( run( { "dj", net( "const1.net" ) } ).out, "CONSTANT1 queries=1\n" );
  EXPECT_EQ( run( { "dj", net( "wire.net" ) } ).out, "NONCONSTANT queries=1\n" );
  auto const bad = run( { "dj", net( "x_and_not_x.net" ) } );
  EXPECT_EQ( bad.code, 1 );
  EXPECT_EQ( run( { "dj", net( "x_and_not_x.net" ), "--skip-verify" } ).out, "NONCONSTANT queries=1\n" );
}

TEST( Cli, TableFullRowsInOrder )
{
  auto const r = run( { "table", "and", "--format", "full" } );
  EXPECT_EQ( r.out, "full 2 1\n00 0\n01 0\n0s 0\n10 0\n11 1\n1s s\ns0 0\ns1 s\nss s\n" );
  EXPECT_EQ( run( { "table", "NOT" } ).out, "basis 1 1\n0 1\n1 0\n" );
}

TEST( Cli, ConvertLog )
{
  auto const r = run( { "convert", net( "and_or_classical.net" ) } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( r.out.substr( 0, r.out.find( "inputs" ) ),
             "REWRITE c0 nodes=2,3,4\nSTATUS converted\nFALLBACK unused\nVERIFY wadditive table=match\n" );
  auto const fixed = sbitlab::read_netlist_string<sbitlab::ternary_gates>( r.out.substr( r.out.find( "inputs" ) ) );
  EXPECT_EQ( fixed.gate_count(), 4u );

  auto const no = run( { "convert", net( "majority_classical.net" ) } );
  EXPECT_EQ( no.code, 1 );
  EXPECT_NE( no.out.find( "STATUS not-convertible\nFALLBACK unused\n" ), std::string::npos );

  auto const out_path = ( std::filesystem::temp_directory_path() / "sbitlab_majority.net" ).string();
  auto const fb = run( { "convert", net( "majority_classical.net" ), "--allow-fallback", "-o", out_path } );
  EXPECT_EQ( fb.code, 0 );
  EXPECT_NE( fb.out.find( "FALLBACK used" ), std::string::npos );
  EXPECT_NE( fb.err.find( "8 Boolean evaluations" ), std::string::npos );
  EXPECT_EQ( run( { "check-wadd", out_path } ).code, 0 );
}

TEST( Cli, ConvertRejectsTernaryGates )
{
  EXPECT_EQ( run( { "convert", net( "const0.net" ) } ).code, 2 );
}

TEST( Cli, CapExceeded )
{
  auto const r = run( { "--cap", "2", "check-wadd", net( "and_or_wadditive.net" ) } );
  EXPECT_EQ( r.code, 3 );
  EXPECT_EQ( run( { "check-wadd", net( "and_or_wadditive.net" ), "--cap", "2" } ).code, 3 );
}

TEST( Cli, EnvironmentOverrides )
{
  ::setenv( "SBITLAB_CAP", "2", 1 );
  auto const r = run( { "check-wadd", net( "and_or_wadditive.net" ) } );
  ::unsetenv( "SBITLAB_CAP" );
  EXPECT_EQ( r.code, 3 );
}

TEST( Cli, SynthAndRandomAreDeterministic )
{
  auto const a = run( { "random-wadd", "--n-in", "3", "--seed", "42" } );
  auto const b = run( { "random-wadd", "--n-in", "3", "--seed", "42" } );
  EXPECT_EQ( a.out, b.out );
  auto const path = temp_file( "sbitlab_rand.basis", a.out );
  auto const s = run( { "synth", path } );
  EXPECT_EQ( s.code, 0 );
  EXPECT_EQ( run( { "check-wadd", temp_file( "sbitlab_rand.net", s.out ) } ).code, 0 );
  auto const p = run( { "synth", path, "--primitive-set" } );
  EXPECT_EQ( p.code, 0 );
  EXPECT_EQ( p.out.find( " S1" ), std::string::npos );
}

TEST( Cli, Generators )
{
  EXPECT_EQ( run( { "gen", "constant", "--n", "2", "--value", "1" } ).out,
             "inputs x1 x2\nw0 = C1 x1\nw1 = C1 x2\nw2 = AND w0 w1\noutputs w2\n" );
  EXPECT_EQ( run( { "gen", "projection", "--n", "1" } ).out, "inputs x1\noutputs x1\n" );
  EXPECT_EQ( run( { "gen" } ).code, 2 );
}

TEST( Cli, DualRailRoundTrip )
{
  auto const d = run( { "dualrail", net( "and_or_wadditive.net" ) } );
  ASSERT_EQ( d.code, 0 );
  EXPECT_NE( d.out.find( "# pair 1 = x1_0 x1_1" ), std::string::npos );
  auto const path = temp_file( "sbitlab_dr.net", d.out );
  // "110" encodes to 01 01 10 and the circuit outputs 0
  auto const r = run( { "eval-dualrail", path, "010110" } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( r.out, "OUTPUT rails=10 word=0\n" );
  EXPECT_EQ( run( { "eval-dualrail", path, "000110" } ).code, 2 );
}

TEST( Cli, UsageErrors )
{
  EXPECT_EQ( run( {} ).code, 2 );
  EXPECT_EQ( run( { "frobnicate" } ).code, 2 );
  EXPECT_EQ( run( { "eval", "/nonexistent.net", "0" } ).code, 2 );
  EXPECT_EQ( run( { "--help" } ).code, 0 );
}
