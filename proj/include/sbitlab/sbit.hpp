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
  \file sbit.hpp
  \brief Ternary sbit values, words, the sum, and maximal-set expansion.

  An sbit is one of `0`, `1` or `s`.  The sum is commutative, associative
  and idempotent; equal operands return themselves and every other pair
  yields `s`.  Words are fixed-length sequences written left to right,
  the leftmost symbol being sbit 1.
*/

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace sbitlab
{

/*! \brief A single ternary value.  The enumerator order is the text order 0 < 1 < s. */
enum class sbit : std::uint8_t
{
  zero = 0,
  one = 1,
  s = 2
};

constexpr bool is_basis( sbit v ) noexcept { return v != sbit::s; }

constexpr sbit sbit_add( sbit a, sbit b ) noexcept { return a == b ? a : sbit::s; }

constexpr char to_char( sbit v ) noexcept
{
  switch ( v )
  {
  case sbit::zero:
    return '0';
  case sbit::one:
    return '1';
  default:
    return 's';
  }
}

constexpr sbit from_bool( bool b ) noexcept { return b ? sbit::one : sbit::zero; }

inline sbit sbit_from_char( char c )
{
  switch ( c )
  {
  case '0':
    return sbit::zero;
  case '1':
    return sbit::one;
  case 's':
    return sbit::s;
  default:
    throw malformed_operand( std::string( "invalid sbit symbol '" ) + c + "', expected one of 0, 1, s" );
  }
}

inline std::ostream& operator<<( std::ostream& os, sbit v ) { return os << to_char( v ); }

/*! \brief An element of K_n: a word of n >= 1 sbits.
 *
 * The length is fixed at construction; there are no resizing mutators.
 * Words order lexicographically with 0 < 1 < s, which is also the order of
 * `ternary_index`.
 */
class sbit_word
{
public:
  explicit sbit_word( std::vector<sbit> symbols )
      : symbols_( std::move( symbols ) )
  {
    if ( symbols_.empty() )
    {
      throw malformed_operand( "sbit words must have length >= 1" );
    }
  }

  sbit_word( std::initializer_list<sbit> symbols )
      : sbit_word( std::vector<sbit>( symbols ) )
  {
  }

  /*! \brief Parses a literal matching `[01s]+`. */
  explicit sbit_word( std::string_view literal )
      : sbit_word( parse( literal ) )
  {
  }

  explicit sbit_word( char const* literal )
      : sbit_word( std::string_view( literal ) )
  {
  }

  /*! \brief Word of `n` copies of `v`. */
  static sbit_word filled( std::size_t n, sbit v ) { return sbit_word( std::vector<sbit>( n, v ) ); }

  std::size_t size() const noexcept { return symbols_.size(); }
  sbit operator[]( std::size_t i ) const { return symbols_[i]; }
  sbit at( std::size_t i ) const { return symbols_.at( i ); }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }
  std::span<sbit const> symbols() const noexcept { return symbols_; }

  /*! \brief Copy with position `i` replaced by `v`. */
  sbit_word with( std::size_t i, sbit v ) const
  {
    auto copy = symbols_;
    copy.at( i ) = v;
    return sbit_word( std::move( copy ) );
  }

  bool is_basis() const noexcept
  {
    return std::none_of( symbols_.begin(), symbols_.end(), []( sbit v ) { return v == sbit::s; } );
  }

  std::size_t s_count() const noexcept
  {
    return static_cast<std::size_t>( std::count( symbols_.begin(), symbols_.end(), sbit::s ) );
  }

  std::string to_string() const
  {
    std::string out;
    out.reserve( symbols_.size() );
    for ( auto v : symbols_ )
    {
      out.push_back( to_char( v ) );
    }
    return out;
  }

  friend bool operator==( sbit_word const&, sbit_word const& ) = default;
  friend auto operator<=>( sbit_word const&, sbit_word const& ) = default;

private:
  static std::vector<sbit> parse( std::string_view literal )
  {
    std::vector<sbit> out;
    out.reserve( literal.size() );
    for ( auto c : literal )
    {
      out.push_back( sbit_from_char( c ) );
    }
    return out;
  }

  std::vector<sbit> symbols_;
};

inline std::ostream& operator<<( std::ostream& os, sbit_word const& w ) { return os << w.to_string(); }

/*! \brief Position-wise sum of two equal-length words. */
inline sbit_word word_add( sbit_word const& a, sbit_word const& b )
{
  if ( a.size() != b.size() )
  {
    throw malformed_operand( "word_add: length mismatch (" + std::to_string( a.size() ) + " vs " +
                             std::to_string( b.size() ) + ")" );
  }
  std::vector<sbit> out( a.size() );
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    out[i] = sbit_add( a[i], b[i] );
  }
  return sbit_word( std::move( out ) );
}

inline sbit_word operator+( sbit_word const& a, sbit_word const& b ) { return word_add( a, b ); }

/*! \brief A nonempty set of basis words of one common length, kept sorted and duplicate free. */
class basis_word_set
{
public:
  explicit basis_word_set( std::vector<sbit_word> members )
      : members_( std::move( members ) )
  {
    if ( members_.empty() )
    {
      throw malformed_operand( "basis word sets must be nonempty: the sum has no neutral element" );
    }
    auto const n = members_.front().size();
    for ( auto const& w : members_ )
    {
      if ( w.size() != n )
      {
        throw malformed_operand( "basis word set members must share one length" );
      }
      if ( !w.is_basis() )
      {
        throw malformed_operand( "basis word set member '" + w.to_string() + "' contains s" );
      }
    }
    std::sort( members_.begin(), members_.end() );
    members_.erase( std::unique( members_.begin(), members_.end() ), members_.end() );
  }

  basis_word_set( std::initializer_list<char const*> literals )
      : basis_word_set( to_words( literals ) )
  {
  }

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t word_length() const noexcept { return members_.front().size(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  std::vector<sbit_word> const& members() const noexcept { return members_; }

  bool contains( sbit_word const& w ) const { return std::binary_search( members_.begin(), members_.end(), w ); }

  /*! \brief True iff every member of this set is in `other`. */
  bool subset_of( basis_word_set const& other ) const
  {
    return std::includes( other.members_.begin(), other.members_.end(), members_.begin(), members_.end() );
  }

  friend bool operator==( basis_word_set const&, basis_word_set const& ) = default;

private:
  static std::vector<sbit_word> to_words( std::initializer_list<char const*> literals )
  {
    std::vector<sbit_word> out;
    for ( auto const* l : literals )
    {
      out.emplace_back( l );
    }
    return out;
  }

  std::vector<sbit_word> members_;
};

/*! \brief Sum of a nonempty collection of equal-length words. */
inline sbit_word sum_set( std::span<sbit_word const> words )
{
  if ( words.empty() )
  {
    throw malformed_operand( "sum_set: empty set has no sum" );
  }
  auto acc = words.front();
  for ( auto const& w : words.subspan( 1 ) )
  {
    acc = word_add( acc, w );
  }
  return acc;
}

inline sbit_word sum_set( basis_word_set const& set ) { return sum_set( std::span<sbit_word const>( set.members() ) ); }

/*! \brief The maximal set of `w`: every substitution of its s positions by 0/1.
 *
 * Members are produced in lexicographic order, 0 before 1.
 */
inline basis_word_set expand( sbit_word const& w )
{
  std::vector<std::size_t> free;
  for ( std::size_t i = 0; i < w.size(); ++i )
  {
    if ( w[i] == sbit::s )
    {
      free.push_back( i );
    }
  }
  std::vector<sbit_word> out;
  out.reserve( std::size_t{ 1 } << free.size() );
  std::vector<sbit> symbols( w.begin(), w.end() );
  for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << free.size() ); ++mask )
  {
    // the leftmost free position takes the most significant bit of mask
    for ( std::size_t k = 0; k < free.size(); ++k )
    {
      symbols[free[k]] = from_bool( ( mask >> ( free.size() - 1 - k ) ) & 1u );
    }
    out.emplace_back( symbols );
  }
  return basis_word_set( std::move( out ) );
}

/* Index arithmetic.  Words are read as base-3 (digits 0, 1, 2 = s) or, for
 * basis words, base-2 numbers with the leftmost sbit most significant, so
 * increasing index equals lexicographic order. */

inline std::uint64_t pow3( std::size_t n )
{
  std::uint64_t r = 1;
  while ( n-- )
  {
    r *= 3;
  }
  return r;
}

inline std::uint64_t ternary_index( std::span<sbit const> w ) noexcept
{
  std::uint64_t idx = 0;
  for ( auto v : w )
  {
    idx = idx * 3 + static_cast<std::uint64_t>( v );
  }
  return idx;
}

inline std::uint64_t ternary_index( sbit_word const& w ) noexcept { return ternary_index( w.symbols() ); }

/*! \brief Precondition: every symbol is 0 or 1. */
inline std::uint64_t basis_index( std::span<sbit const> w ) noexcept
{
  std::uint64_t idx = 0;
  for ( auto v : w )
  {
    idx = ( idx << 1 ) | static_cast<std::uint64_t>( v == sbit::one );
  }
  return idx;
}

inline std::uint64_t basis_index( sbit_word const& w ) noexcept { return basis_index( w.symbols() ); }

inline sbit_word word_from_ternary_index( std::uint64_t idx, std::size_t n )
{
  std::vector<sbit> out( n );
  for ( std::size_t i = n; i-- > 0; )
  {
    out[i] = static_cast<sbit>( idx % 3 );
    idx /= 3;
  }
  return sbit_word( std::move( out ) );
}

inline sbit_word word_from_basis_index( std::uint64_t idx, std::size_t n )
{
  std::vector<sbit> out( n );
  for ( std::size_t i = n; i-- > 0; )
  {
    out[i] = from_bool( idx & 1u );
    idx >>= 1;
  }
  return sbit_word( std::move( out ) );
}

/*! \brief All 3^n words of K_n in lexicographic order. */
inline std::vector<sbit_word> all_words( std::size_t n )
{
  std::vector<sbit_word> out;
  auto const total = pow3( n );
  out.reserve( total );
  for ( std::uint64_t i = 0; i < total; ++i )
  {
    out.push_back( word_from_ternary_index( i, n ) );
  }
  return out;
}

/*! \brief All 2^n basis words in lexicographic order. */
inline std::vector<sbit_word> all_basis_words( std::size_t n )
{
  std::vector<sbit_word> out;
  out.reserve( std::size_t{ 1 } << n );
  for ( std::uint64_t i = 0; i < ( std::uint64_t{ 1 } << n ); ++i )
  {
    out.push_back( word_from_basis_index( i, n ) );
  }
  return out;
}

} // namespace sbitlab
