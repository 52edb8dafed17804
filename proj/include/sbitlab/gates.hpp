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
  \file gates.hpp
  \brief Basis tables, the w-additive extension, and the named gate catalogue.

  A w-additive operator is fixed by its values on basis words; its value on
  any other word w is the sum of the basis values over the maximal set of w.
  Every named gate is stored as basis rows, extended to the full domain on
  first use, and cross-checked against a hard-coded copy of its full table.
*/

#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detail/parallel.hpp"
#include "error.hpp"
#include "sbit.hpp"

namespace sbitlab
{

/*! \brief Default width cap for exhaustive 3^n sweeps. */
inline constexpr std::size_t default_cap = 12;

/*! \brief Every gate the netlists know about.
 *
 * `const0` and `const1` are zero-input sources.  They are only emitted by
 * the primitive-set synthesizer, which needs a constant operand to build
 * C0/C1 out of AND/OR.
 */
enum class gate_kind : std::uint8_t
{
  i,
  not_,
  h,
  c0,
  c1,
  s0,
  s0bar,
  s1,
  s1bar,
  and_,
  or_,
  xor_,
  fanout,
  t,
  const0,
  const1
};

inline constexpr std::array all_gate_kinds = {
    gate_kind::i, gate_kind::not_, gate_kind::h, gate_kind::c0, gate_kind::c1, gate_kind::s0,
    gate_kind::s0bar, gate_kind::s1, gate_kind::s1bar, gate_kind::and_, gate_kind::or_, gate_kind::xor_,
    gate_kind::fanout, gate_kind::t, gate_kind::const0, gate_kind::const1 };

/*! \brief The fourteen gates with a full-domain table (everything but the constant sources). */
inline constexpr std::array table_gate_kinds = {
    gate_kind::i, gate_kind::not_, gate_kind::h, gate_kind::c0, gate_kind::c1, gate_kind::s0,
    gate_kind::s0bar, gate_kind::s1, gate_kind::s1bar, gate_kind::and_, gate_kind::or_, gate_kind::xor_,
    gate_kind::fanout, gate_kind::t };

namespace detail
{

struct gate_spec
{
  gate_kind kind;
  std::string_view name;
  std::size_t arity_in;
  std::size_t arity_out;
  /* outputs on basis inputs, concatenated in basis order */
  std::string_view basis_rows;
  /* outputs on all 3^n inputs in lexicographic order 0 < 1 < s */
  std::string_view full_rows;
};

// clang-format off
inline constexpr std::array<gate_spec, 16> gate_specs = { {
    { gate_kind::i,      "I",      1, 1, "01",       "01s" },
    { gate_kind::not_,   "NOT",    1, 1, "10",       "10s" },
    { gate_kind::h,      "H",      1, 1, "ss",       "sss" },
    { gate_kind::c0,     "C0",     1, 1, "00",       "000" },
    { gate_kind::c1,     "C1",     1, 1, "11",       "111" },
    { gate_kind::s0,     "S0",     1, 1, "s0",       "s0s" },
    { gate_kind::s0bar,  "S0BAR",  1, 1, "0s",       "0ss" },
    { gate_kind::s1,     "S1",     1, 1, "s1",       "s1s" },
    { gate_kind::s1bar,  "S1BAR",  1, 1, "1s",       "1ss" },
    { gate_kind::and_,   "AND",    2, 1, "0001",     "00001s0ss" },
    { gate_kind::or_,    "OR",     2, 1, "0111",     "01s111s1s" },
    { gate_kind::xor_,   "XOR",    2, 1, "0110",     "01s10ssss" },
    { gate_kind::fanout, "FANOUT", 1, 2, "0011",     "0011ss" },
    // control, first target, second target
    { gate_kind::t,      "T",      3, 1, "00110101", "000111sss01s01s01s0sss1ssss" },
    { gate_kind::const0, "CONST0", 0, 1, "0",        "0" },
    { gate_kind::const1, "CONST1", 0, 1, "1",        "1" },
} };
// clang-format on

inline gate_spec const& spec_of( gate_kind g ) { return gate_specs[static_cast<std::size_t>( g )]; }

} // namespace detail

inline std::string_view gate_name( gate_kind g ) { return detail::spec_of( g ).name; }
inline std::size_t arity_in( gate_kind g ) { return detail::spec_of( g ).arity_in; }
inline std::size_t arity_out( gate_kind g ) { return detail::spec_of( g ).arity_out; }

/*! \brief Case-insensitive lookup by name; `std::nullopt` if unknown. */
inline std::optional<gate_kind> parse_gate_kind( std::string_view name )
{
  std::string upper( name );
  for ( auto& c : upper )
  {
    c = static_cast<char>( std::toupper( static_cast<unsigned char>( c ) ) );
  }
  for ( auto const& spec : detail::gate_specs )
  {
    if ( spec.name == upper )
    {
      return spec.kind;
    }
  }
  return std::nullopt;
}

/*! \brief A function from every basis word of width `n_in` to a word of width `n_out`.
 *
 * Rows are indexed by `basis_index` of their key.  Outputs may contain s.
 */
class basis_table
{
public:
  basis_table( std::size_t n_in, std::size_t n_out, std::vector<sbit_word> rows )
      : n_in_( n_in ), n_out_( n_out ), rows_( std::move( rows ) )
  {
    if ( n_in == 0 || n_in >= 63 )
    {
      throw malformed_operand( "basis table input width must be in [1, 62]" );
    }
    if ( rows_.size() != ( std::uint64_t{ 1 } << n_in ) )
    {
      throw malformed_operand( "basis table needs exactly 2^" + std::to_string( n_in ) + " rows, got " +
                               std::to_string( rows_.size() ) );
    }
    for ( auto const& r : rows_ )
    {
      if ( r.size() != n_out )
      {
        throw malformed_operand( "basis table row '" + r.to_string() + "' does not have width " +
                                 std::to_string( n_out ) );
      }
    }
  }

  std::size_t n_in() const noexcept { return n_in_; }
  std::size_t n_out() const noexcept { return n_out_; }
  std::vector<sbit_word> const& rows() const noexcept { return rows_; }

  sbit_word const& row( std::uint64_t basis_idx ) const { return rows_.at( basis_idx ); }

  sbit_word const& operator()( sbit_word const& key ) const
  {
    if ( key.size() != n_in_ || !key.is_basis() )
    {
      throw malformed_operand( "basis table keys are basis words of width " + std::to_string( n_in_ ) );
    }
    return rows_[basis_index( key )];
  }

  /*! \brief Output position `j` as a single-output table. */
  basis_table component( std::size_t j ) const
  {
    std::vector<sbit_word> rows;
    rows.reserve( rows_.size() );
    for ( auto const& r : rows_ )
    {
      rows.push_back( sbit_word{ r.at( j ) } );
    }
    return basis_table( n_in_, 1, std::move( rows ) );
  }

  /*! \brief The table with the first input fixed to `v` (0 or 1).  Requires n_in >= 2. */
  basis_table restrict_first( sbit v ) const
  {
    if ( n_in_ < 2 || !is_basis( v ) )
    {
      throw malformed_operand( "restrict_first needs n_in >= 2 and a basis value" );
    }
    auto const half = rows_.size() / 2;
    auto const offset = v == sbit::one ? half : 0;
    return basis_table( n_in_ - 1, n_out_,
                        std::vector<sbit_word>( rows_.begin() + offset, rows_.begin() + offset + half ) );
  }

  friend bool operator==( basis_table const&, basis_table const& ) = default;

private:
  std::size_t n_in_;
  std::size_t n_out_;
  std::vector<sbit_word> rows_;
};

/*! \brief The w-additive extension of `t` evaluated at `in`: the sum of t over the maximal set of `in`. */
inline sbit_word extend( basis_table const& t, sbit_word const& in )
{
  if ( in.size() != t.n_in() )
  {
    throw arity_error( "extend: input width " + std::to_string( in.size() ) + " does not match table width " +
                       std::to_string( t.n_in() ) );
  }
  auto const members = expand( in );
  auto it = members.begin();
  auto acc = t( *it );
  for ( ++it; it != members.end(); ++it )
  {
    acc = word_add( acc, t( *it ) );
  }
  return acc;
}

/*! \brief A total function K_n -> K_m given as 3^n rows in lexicographic order. */
struct full_table
{
  std::size_t n_in;
  std::size_t n_out;
  std::vector<sbit_word> rows;

  sbit_word const& operator()( sbit_word const& in ) const { return rows.at( ternary_index( in ) ); }
};

namespace detail
{

struct gate_entry
{
  std::size_t in;
  std::size_t out;
  std::vector<sbit> full; // 3^in rows of `out` symbols
};

inline std::vector<sbit_word> split_rows( std::string_view flat, std::size_t width )
{
  std::vector<sbit_word> rows;
  for ( std::size_t p = 0; p < flat.size(); p += width )
  {
    rows.emplace_back( flat.substr( p, width ) );
  }
  return rows;
}

inline std::vector<gate_entry> build_catalog()
{
  std::vector<gate_entry> catalog;
  for ( auto const& spec : gate_specs )
  {
    gate_entry entry{ spec.arity_in, spec.arity_out, {} };
    if ( spec.arity_in == 0 )
    {
      for ( auto c : spec.full_rows )
      {
        entry.full.push_back( sbit_from_char( c ) );
      }
      catalog.push_back( std::move( entry ) );
      continue;
    }
    basis_table const basis( spec.arity_in, spec.arity_out, split_rows( spec.basis_rows, spec.arity_out ) );
    for ( auto const& w : all_words( spec.arity_in ) )
    {
      auto const out = extend( basis, w );
      entry.full.insert( entry.full.end(), out.begin(), out.end() );
    }
    std::string derived;
    for ( auto v : entry.full )
    {
      derived.push_back( to_char( v ) );
    }
    if ( derived != spec.full_rows )
    {
      throw std::logic_error( "gate " + std::string( spec.name ) + ": extension of basis rows gives " + derived +
                              ", hard-coded table is " + std::string( spec.full_rows ) );
    }
    catalog.push_back( std::move( entry ) );
  }
  return catalog;
}

inline std::vector<gate_entry> const& catalog()
{
  static std::vector<gate_entry> const instance = build_catalog();
  return instance;
}

} // namespace detail

/*! \brief Span form of gate application for hot loops.  No arity checks. */
inline void apply_gate( gate_kind g, std::span<sbit const> in, std::span<sbit> out )
{
  auto const& entry = detail::catalog()[static_cast<std::size_t>( g )];
  auto const base = ternary_index( in ) * entry.out;
  for ( std::size_t j = 0; j < entry.out; ++j )
  {
    out[j] = entry.full[base + j];
  }
}

inline sbit_word gate_apply( gate_kind g, sbit_word const& in )
{
  if ( in.size() != arity_in( g ) )
  {
    throw arity_error( "gate " + std::string( gate_name( g ) ) + " takes " + std::to_string( arity_in( g ) ) +
                       " sbits, got " + std::to_string( in.size() ) );
  }
  std::vector<sbit> out( arity_out( g ) );
  apply_gate( g, in.symbols(), out );
  return sbit_word( std::move( out ) );
}

/*! \brief Basis rows of a named gate.  Not defined for the constant sources. */
inline basis_table gate_basis_table( gate_kind g )
{
  auto const& spec = detail::spec_of( g );
  if ( spec.arity_in == 0 )
  {
    throw arity_error( "constant sources have no basis table" );
  }
  return basis_table( spec.arity_in, spec.arity_out, detail::split_rows( spec.basis_rows, spec.arity_out ) );
}

/*! \brief Full-domain table of a named gate. */
inline full_table gate_full_table( gate_kind g )
{
  if ( arity_in( g ) == 0 )
  {
    throw arity_error( "constant sources have no full-domain table over K_n" );
  }
  auto const& entry = detail::catalog()[static_cast<std::size_t>( g )];
  full_table t{ entry.in, entry.out, {} };
  for ( std::size_t r = 0; r < entry.full.size(); r += entry.out )
  {
    t.rows.emplace_back( std::vector<sbit>( entry.full.begin() + r, entry.full.begin() + r + entry.out ) );
  }
  return t;
}

/*! \brief Boolean semantics of a gate on 0/1 values.
 *
 * Gates that only produce s on basis inputs (H and the S family) have no
 * Boolean reading and raise `arity_error`.
 */
inline void boolean_apply( gate_kind g, std::span<bool const> in, std::span<bool> out )
{
  switch ( g )
  {
  case gate_kind::i:
    out[0] = in[0];
    break;
  case gate_kind::not_:
    out[0] = !in[0];
    break;
  case gate_kind::c0:
  case gate_kind::const0:
    out[0] = false;
    break;
  case gate_kind::c1:
  case gate_kind::const1:
    out[0] = true;
    break;
  case gate_kind::and_:
    out[0] = in[0] && in[1];
    break;
  case gate_kind::or_:
    out[0] = in[0] || in[1];
    break;
  case gate_kind::xor_:
    out[0] = in[0] != in[1];
    break;
  case gate_kind::fanout:
    out[0] = in[0];
    out[1] = in[0];
    break;
  case gate_kind::t:
    out[0] = in[0] ? in[2] : in[1];
    break;
  default:
    throw arity_error( "gate " + std::string( gate_name( g ) ) + " has no Boolean semantics" );
  }
}

/*! \brief Outcome of a weak-additivity check. */
struct wadd_verdict
{
  bool wadditive = true;
  /* lexicographically least input where f differs from its extension */
  std::optional<sbit_word> witness;

  explicit operator bool() const noexcept { return wadditive; }
};

namespace detail
{

inline void require_cap( std::size_t n, std::size_t cap )
{
  if ( n > cap )
  {
    throw cap_exceeded( n, cap, '3' );
  }
}

/*! \brief Core 3^n sweep.
 *
 * `eval(idx, out)` writes f(word with ternary index idx) into `out` and
 * must be safe to call concurrently.  The extension is built bottom-up:
 * for a word with an s at position p, ext(w) = ext(w[p:=0]) + ext(w[p:=1]),
 * both of which have smaller indices.
 */
template<class Eval>
wadd_verdict wadd_sweep( std::size_t n_in, std::size_t n_out, Eval&& eval )
{
  auto const total = pow3( n_in );
  std::vector<sbit> values( total * n_out );
  parallel_for( total, [&]( std::uint64_t begin, std::uint64_t end ) {
    for ( auto idx = begin; idx < end; ++idx )
    {
      eval( idx, std::span<sbit>( values.data() + idx * n_out, n_out ) );
    }
  } );

  std::vector<sbit> ext( total * n_out );
  for ( std::uint64_t idx = 0; idx < total; ++idx )
  {
    std::uint64_t rest = idx;
    std::uint64_t place = 1;
    bool found = false;
    for ( std::size_t p = 0; p < n_in; ++p, rest /= 3, place *= 3 )
    {
      if ( rest % 3 == 2 )
      {
        found = true;
        break;
      }
    }
    auto* dst = ext.data() + idx * n_out;
    if ( !found )
    {
      std::copy_n( values.data() + idx * n_out, n_out, dst );
      continue;
    }
    auto const* lo = ext.data() + ( idx - 2 * place ) * n_out;
    auto const* hi = ext.data() + ( idx - place ) * n_out;
    for ( std::size_t j = 0; j < n_out; ++j )
    {
      dst[j] = sbit_add( lo[j], hi[j] );
    }
  }

  for ( std::uint64_t idx = 0; idx < total; ++idx )
  {
    if ( !std::equal( values.begin() + idx * n_out, values.begin() + ( idx + 1 ) * n_out, ext.begin() + idx * n_out ) )
    {
      return { false, word_from_ternary_index( idx, n_in ) };
    }
  }
  return {};
}

} // namespace detail

/*! \brief Checks f(w) == extend(f restricted to basis)(w) for every w in K_n.
 *
 * `f` maps an `sbit_word` of width `n_in` to one of width `n_out` and must
 * be safe to call from several threads.  Multi-output functions are
 * checked position by position; any differing position is a violation.
 */
template<class Fn>
wadd_verdict check_weak_additivity( std::size_t n_in, std::size_t n_out, Fn&& f, std::size_t cap = default_cap )
{
  detail::require_cap( n_in, cap );
  return detail::wadd_sweep( n_in, n_out, [&]( std::uint64_t idx, std::span<sbit> out ) {
    auto const result = f( word_from_ternary_index( idx, n_in ) );
    if ( result.size() != n_out )
    {
      throw arity_error( "function output width does not match n_out" );
    }
    std::copy( result.begin(), result.end(), out.begin() );
  } );
}

inline wadd_verdict check_weak_additivity( full_table const& f, std::size_t cap = default_cap )
{
  detail::require_cap( f.n_in, cap );
  if ( f.rows.size() != pow3( f.n_in ) )
  {
    throw malformed_operand( "full table needs 3^n_in rows" );
  }
  return detail::wadd_sweep( f.n_in, f.n_out, [&]( std::uint64_t idx, std::span<sbit> out ) {
    auto const& row = f.rows[idx];
    if ( row.size() != f.n_out )
    {
      throw malformed_operand( "full table row has the wrong width" );
    }
    std::copy( row.begin(), row.end(), out.begin() );
  } );
}

/*! \brief The extension of `t` over all 3^n inputs. */
inline full_table extend_all( basis_table const& t, std::size_t cap = default_cap )
{
  detail::require_cap( t.n_in(), cap );
  full_table out{ t.n_in(), t.n_out(), {} };
  out.rows.reserve( pow3( t.n_in() ) );
  for ( auto const& w : all_words( t.n_in() ) )
  {
    out.rows.push_back( extend( t, w ) );
  }
  return out;
}

/*! \brief Deterministic pseudo-random table: every output symbol drawn uniformly from {0, 1, s}.
 *
 * Uses mt19937_64 and a plain modulus so the result is identical across
 * standard library implementations.
 */
inline basis_table random_basis_table( std::size_t n_in, std::size_t n_out, std::uint64_t seed,
                                       std::size_t cap = default_cap )
{
  if ( n_in > cap )
  {
    throw cap_exceeded( n_in, cap, '2' );
  }
  std::mt19937_64 rng( seed );
  std::vector<sbit_word> rows;
  rows.reserve( std::size_t{ 1 } << n_in );
  for ( std::uint64_t r = 0; r < ( std::uint64_t{ 1 } << n_in ); ++r )
  {
    std::vector<sbit> out( n_out );
    for ( auto& v : out )
    {
      v = static_cast<sbit>( rng() % 3 );
    }
    rows.emplace_back( std::move( out ) );
  }
  return basis_table( n_in, n_out, std::move( rows ) );
}

/*! \brief Like `random_basis_table` but with outputs restricted to 0/1. */
inline basis_table random_boolean_table( std::size_t n_in, std::size_t n_out, std::uint64_t seed,
                                         std::size_t cap = default_cap )
{
  if ( n_in > cap )
  {
    throw cap_exceeded( n_in, cap, '2' );
  }
  std::mt19937_64 rng( seed );
  std::vector<sbit_word> rows;
  for ( std::uint64_t r = 0; r < ( std::uint64_t{ 1 } << n_in ); ++r )
  {
    std::vector<sbit> out( n_out );
    for ( auto& v : out )
    {
      v = from_bool( rng() & 1u );
    }
    rows.emplace_back( std::move( out ) );
  }
  return basis_table( n_in, n_out, std::move( rows ) );
}

} // namespace sbitlab
