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
  \file error.hpp
  \brief Exception hierarchy shared by all sbitlab modules.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sbitlab
{

/*! \brief Base class of every error raised by the library. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Operands that do not fit together (length mismatch, bad literal, empty set). */
class malformed_operand : public error
{
public:
  using error::error;
};

/*! \brief Gate or circuit applied to a word of the wrong width. */
class arity_error : public malformed_operand
{
public:
  using malformed_operand::malformed_operand;
};

/*! \brief A netlist violates the IR invariants.
 *
 * Carries the offending node index when one can be identified, or the
 * source line for parse errors.
 */
class structural_error : public error
{
public:
  explicit structural_error( std::string const& what, std::optional<std::size_t> node = std::nullopt )
      : error( node ? what + " (node " + std::to_string( *node ) + ")" : what ),
        node_( node )
  {
  }

  std::optional<std::size_t> node() const noexcept { return node_; }

private:
  std::optional<std::size_t> node_;
};

/*! \brief An exhaustive sweep would exceed the configured width cap. */
class cap_exceeded : public error
{
public:
  cap_exceeded( std::size_t width, std::size_t cap, char base )
      : error( std::string( 1, base ) + "^" + std::to_string( width ) + " evaluations requested, cap is " +
               std::string( 1, base ) + "^" + std::to_string( cap ) ),
        width_( width ), cap_( cap )
  {
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t width_;
  std::size_t cap_;
};

/*! \brief A rail vector contains the forbidden (0,0) pair or has odd length. */
class invalid_encoding : public error
{
public:
  invalid_encoding( std::string const& what, std::size_t pair_index )
      : error( what ), pair_index_( pair_index )
  {
  }

  std::size_t pair_index() const noexcept { return pair_index_; }

private:
  std::size_t pair_index_;
};

/*! \brief An algorithm driver observed oracle answers that contradict its promise. */
class inconsistency_error : public error
{
public:
  using error::error;
};

} // namespace sbitlab
