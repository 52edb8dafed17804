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
  \file cli.hpp
  \brief The `sbitlab` command line, callable in-process for tests.

  Exit codes: 0 success, 1 verdict failure (violation, not convertible,
  inconsistent oracle), 2 usage or structural error, 3 cap exceeded.
*/

#pragma once

#include <CLI11.hpp>

#include <sbitlab/sbitlab.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace sbitlab::cli
{

enum exit_code : int
{
  ok = 0,
  verdict_failure = 1,
  usage_error = 2,
  cap_error = 3
};

struct config
{
  std::size_t cap = default_cap;
  std::uint64_t seed = 0;
  bool allow_fallback = false;
  bool skip_verify = false;
};

namespace detail
{

inline std::string slurp( std::string const& path )
{
  std::ifstream is( path );
  if ( !is )
  {
    throw error( "cannot open '" + path + "'" );
  }
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

/* First token of the first non-comment line: "inputs", "basis" or "full". */
inline std::string header_keyword( std::string const& text )
{
  std::istringstream is( text );
  auto const lines = sbitlab::detail::content_lines( is );
  if ( lines.empty() )
  {
    throw structural_error( "empty file" );
  }
  auto const tokens = sbitlab::detail::split_ws( lines.front().text );
  return tokens.empty() ? std::string{} : tokens.front();
}

inline ternary_circuit load_ternary( std::string const& path )
{
  return read_netlist_string<ternary_gates>( slurp( path ) );
}

inline std::string verdict_line( verdict const& v )
{
  if ( v.wadditive() )
  {
    return "WADDITIVE gates=" + std::to_string( v.gate_count );
  }
  return "VIOLATION witness=" + v.witness->to_string() + " gates=" + std::to_string( v.gate_count );
}

inline std::string join_ids( std::vector<std::size_t> const& ids )
{
  std::string s;
  for ( auto id : ids )
  {
    s += ( s.empty() ? "" : "," ) + std::to_string( id );
  }
  return s;
}

} // namespace detail

/*! \brief Parses `argv` and runs one subcommand; returns the process exit code. */
inline int run( int argc, char const* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr )
{
  CLI::App app{ "sbitlab: sbit circuits, w-additivity checks, synthesis and dual-rail compilation" };
  app.require_subcommand( 1 );
  app.fallthrough();

  config cfg;
  app.add_option( "--cap", cfg.cap, "Largest input width for exhaustive sweeps" )
      ->envname( "SBITLAB_CAP" )
      ->check( CLI::PositiveNumber );
  app.add_option( "--seed", cfg.seed, "Seed for random generators" )->envname( "SBITLAB_SEED" );
  app.add_flag( "--allow-fallback", cfg.allow_fallback, "Let convert resynthesize from the truth table" )
      ->envname( "SBITLAB_ALLOW_FALLBACK" );
  app.add_flag( "--skip-verify", cfg.skip_verify, "Skip exhaustive verification steps" )
      ->envname( "SBITLAB_SKIP_VERIFY" );

  std::function<int()> action;

  // eval
  std::string path;
  std::string word;
  auto* eval_cmd = app.add_subcommand( "eval", "Evaluate a ternary netlist on a word" );
  eval_cmd->add_option( "netlist", path )->required();
  eval_cmd->add_option( "word", word )->required();
  eval_cmd->callback( [&] {
    action = [&]() -> int {
      out << eval( detail::load_ternary( path ), sbit_word( word ) ) << '\n';
      return ok;
    };
  } );

  // table
  std::string target;
  std::string format = "basis";
  bool full_flag = false;
  auto* table_cmd = app.add_subcommand( "table", "Print the table of a gate or netlist" );
  table_cmd->add_option( "target", target, "Gate name or netlist file" )->required();
  table_cmd->add_option( "--format", format )->check( CLI::IsMember( { "basis", "full" } ) );
  table_cmd->add_flag( "--full", full_flag, "Same as --format full" );
  table_cmd->callback( [&] {
    action = [&]() -> int {
      bool const full = full_flag || format == "full";
      if ( auto g = parse_gate_kind( target ); g && arity_in( *g ) > 0 )
      {
        full ? write_full_table( out, gate_full_table( *g ) ) : write_basis_table( out, gate_basis_table( *g ) );
        return ok;
      }
      auto const c = detail::load_ternary( target );
      if ( !full )
      {
        write_basis_table( out, basis_table_of( c, cfg.cap ) );
        return ok;
      }
      sbitlab::detail::require_cap( c.num_inputs(), cfg.cap );
      full_table t{ c.num_inputs(), c.num_outputs(), {} };
      for ( auto const& w : all_words( c.num_inputs() ) )
      {
        t.rows.push_back( eval( c, w ) );
      }
      write_full_table( out, t );
      return ok;
    };
  } );

  // check-wadd
  auto* check_cmd = app.add_subcommand( "check-wadd", "Exhaustively check a netlist or full table for w-additivity" );
  check_cmd->add_option( "file", path )->required();
  check_cmd->callback( [&] {
    action = [&]() -> int {
      auto const text = detail::slurp( path );
      auto const head = detail::header_keyword( text );
      if ( head == "full" )
      {
        std::istringstream is( text );
        auto const t = read_full_table( is );
        auto const v = check_weak_additivity( t, cfg.cap );
        if ( v )
        {
          out << "WADDITIVE rows=" << t.rows.size() << '\n';
          return ok;
        }
        out << "VIOLATION witness=" << *v.witness << " rows=" << t.rows.size() << '\n';
        return verdict_failure;
      }
      if ( head == "basis" )
      {
        // any basis table defines a w-additive operator through its extension
        std::istringstream is( text );
        auto const t = read_basis_table( is );
        out << "WADDITIVE rows=" << t.rows().size() << '\n';
        return ok;
      }
      auto const v = check_circuit( read_netlist_string<ternary_gates>( text ), cfg.cap );
      out << detail::verdict_line( v ) << '\n';
      return v.wadditive() ? ok : verdict_failure;
    };
  } );

  // convert
  std::string out_path;
  auto* convert_cmd = app.add_subcommand( "convert", "Lower a classical netlist to a w-additive circuit" );
  convert_cmd->add_option( "netlist", path )->required();
  convert_cmd->add_option( "-o,--output", out_path, "Write the circuit here instead of stdout" );
  convert_cmd->callback( [&] {
    action = [&]() -> int {
      auto const source = read_netlist_string<classical_gates>( detail::slurp( path ) );
      convert_options opts;
      opts.allow_fallback = cfg.allow_fallback;
      opts.cap = cfg.cap;
      opts.on_fallback = [&]( std::uint64_t rows ) {
        err << "fallback: synthesizing from the truth table, " << rows << " Boolean evaluations\n";
      };
      auto const report = convert( source, opts );
      for ( auto const& r : report.rewrites )
      {
        out << "REWRITE " << ( r.replacement == gate_kind::c0 ? "c0" : "c1" ) << " nodes=" << detail::join_ids( r.nodes )
            << '\n';
      }
      if ( !report.unmatched_fanouts.empty() )
      {
        out << "UNMATCHED fanouts=" << detail::join_ids( report.unmatched_fanouts ) << '\n';
      }
      out << "STATUS " << ( report.status == convert_status::converted ? "converted" : "not-convertible" ) << '\n';
      out << "FALLBACK " << ( report.fallback_used ? "used" : "unused" ) << '\n';
      if ( !report.circuit )
      {
        return verdict_failure;
      }
      auto const& c = *report.circuit;
      int code = ok;
      if ( !cfg.skip_verify )
      {
        if ( c.num_inputs() > cfg.cap )
        {
          out << "VERIFY skipped cap=" << cfg.cap << '\n';
        }
        else
        {
          auto const v = check_circuit( c, cfg.cap );
          bool const same = basis_table_of( c, cfg.cap ) == boolean_table_of( source, cfg.cap );
          out << "VERIFY " << ( v.wadditive() ? "wadditive" : "violation" ) << " table=" << ( same ? "match" : "differs" )
              << '\n';
          code = v.wadditive() && same ? ok : verdict_failure;
        }
      }
      if ( out_path.empty() )
      {
        write_netlist( out, c );
      }
      else
      {
        std::ofstream os( out_path );
        if ( !os )
        {
          throw error( "cannot write '" + out_path + "'" );
        }
        write_netlist( os, c );
      }
      return code;
    };
  } );

  // synth
  bool primitive = false;
  auto* synth_cmd = app.add_subcommand( "synth", "Synthesize a circuit from a basis table file" );
  synth_cmd->add_option( "table", path )->required();
  synth_cmd->add_flag( "--primitive-set", primitive, "Use only NOT, S0, AND, OR, FANOUT, T and constants" );
  synth_cmd->callback( [&] {
    action = [&]() -> int {
      std::istringstream is( detail::slurp( path ) );
      write_netlist( out, synthesize( read_basis_table( is ), { primitive } ) );
      return ok;
    };
  } );

  // dj
  auto* dj_cmd = app.add_subcommand( "dj", "Classify a one-output oracle as constant or not with one query" );
  dj_cmd->add_option( "netlist", path )->required();
  dj_cmd->callback( [&] {
    action = [&]() -> int {
      auto const c = detail::load_ternary( path );
      if ( !cfg.skip_verify )
      {
        auto const v = check_circuit( c, cfg.cap );
        if ( !v.wadditive() )
        {
          out << detail::verdict_line( v ) << '\n';
          return verdict_failure;
        }
      }
      auto const r = deutsch_classify( c, { false, cfg.cap } );
      std::string name = to_string( r.classification );
      for ( auto& ch : name )
      {
        ch = static_cast<char>( std::toupper( static_cast<unsigned char>( ch ) ) );
      }
      out << name << " queries=" << r.queries << '\n';
      return ok;
    };
  } );

  // search
  std::size_t n = 0;
  auto* search_cmd = app.add_subcommand( "search", "Recover the marked word of an AND-of-literals oracle" );
  search_cmd->add_option( "netlist", path )->required();
  search_cmd->add_option( "--n", n, "Input width" )->required();
  search_cmd->callback( [&] {
    action = [&]() -> int {
      auto const r = search( detail::load_ternary( path ), n );
      out << "FOUND " << r.found << " queries=" << r.queries << '\n';
      return ok;
    };
  } );

  // oracle-gen
  auto* oracle_cmd = app.add_subcommand( "oracle-gen", "Write the oracle netlist marking one basis word" );
  oracle_cmd->add_option( "word", word )->required();
  oracle_cmd->callback( [&] {
    action = [&]() -> int {
      write_netlist( out, oracle_circuit( sbit_word( word ) ) );
      return ok;
    };
  } );

  // gen constant | projection
  std::size_t j = 1;
  std::string value = "0";
  auto* gen_cmd = app.add_subcommand( "gen", "Generate constant or projection circuits" );
  gen_cmd->require_subcommand( 1 );
  auto* gen_const = gen_cmd->add_subcommand( "constant", "Constant function on n inputs" );
  gen_const->add_option( "--n", n )->required()->check( CLI::PositiveNumber );
  gen_const->add_option( "--value", value )->check( CLI::IsMember( { "0", "1" } ) );
  gen_const->callback( [&] {
    action = [&]() -> int {
      write_netlist( out, constant_circuit( n, value == "1" ? sbit::one : sbit::zero ) );
      return ok;
    };
  } );
  auto* gen_proj = gen_cmd->add_subcommand( "projection", "Projection onto input j of n" );
  gen_proj->add_option( "--n", n )->required()->check( CLI::PositiveNumber );
  gen_proj->add_option( "--j", j )->check( CLI::PositiveNumber );
  gen_proj->callback( [&] {
    action = [&]() -> int {
      write_netlist( out, projection_circuit( n, j ) );
      return ok;
    };
  } );

  // dualrail
  auto* dr_cmd = app.add_subcommand( "dualrail", "Compile a ternary netlist to a Boolean rail-pair netlist" );
  dr_cmd->add_option( "netlist", path )->required();
  dr_cmd->callback( [&] {
    action = [&]() -> int {
      auto const d = compile_dualrail( detail::load_ternary( path ) );
      auto comments = pair_comments( d.circuit );
      comments.push_back( "source gates = " + std::to_string( d.source_gates ) +
                          ", largest template = " + std::to_string( d.k ) );
      write_netlist( out, d.circuit, comments );
      return ok;
    };
  } );

  // eval-dualrail
  std::string bits;
  auto* edr_cmd = app.add_subcommand( "eval-dualrail", "Simulate a Boolean rail-pair netlist" );
  edr_cmd->add_option( "netlist", path )->required();
  edr_cmd->add_option( "bits", bits, "Input rails, two per sbit, zero rail first" )->required();
  edr_cmd->callback( [&] {
    action = [&]() -> int {
      auto const c = read_netlist_string<boolean_gates>( detail::slurp( path ) );
      auto const rails = eval_dualrail( c, parse_rails( bits ) );
      try
      {
        auto const w = decode( rails );
        out << "OUTPUT rails=" << rails_to_string( rails ) << " word=" << w << '\n';
        return ok;
      }
      catch ( invalid_encoding const& e )
      {
        out << "INVALID rails=" << rails_to_string( rails ) << " pair=" << e.pair_index() + 1 << '\n';
        return verdict_failure;
      }
    };
  } );

  // random-wadd
  std::size_t n_in = 2;
  std::size_t n_out = 1;
  bool as_circuit = false;
  auto* rnd_cmd = app.add_subcommand( "random-wadd", "Print a random basis table (a w-additive operator) for --seed" );
  rnd_cmd->add_option( "--n-in", n_in )->check( CLI::PositiveNumber );
  rnd_cmd->add_option( "--n-out", n_out )->check( CLI::PositiveNumber );
  rnd_cmd->add_flag( "--circuit", as_circuit, "Print the synthesized circuit instead of the table" );
  rnd_cmd->callback( [&] {
    action = [&]() -> int {
      auto const t = random_basis_table( n_in, n_out, cfg.seed, cfg.cap );
      as_circuit ? write_netlist( out, synthesize( t ) ) : write_basis_table( out, t );
      return ok;
    };
  } );

  try
  {
    app.parse( argc, argv );
    return action ? action() : usage_error;
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? ok : usage_error;
  }
  catch ( cap_exceeded const& e )
  {
    err << "error: " << e.what() << '\n';
    return cap_error;
  }
  catch ( inconsistency_error const& e )
  {
    err << "error: " << e.what() << '\n';
    return verdict_failure;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

} // namespace sbitlab::cli
