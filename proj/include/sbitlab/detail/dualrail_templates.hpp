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
  \file dualrail_templates.hpp
  \brief Boolean netlists implementing each ternary gate on rail pairs.

  Each sbit is a pair (zero rail, one rail): 0 = 10, 1 = 01, s = 11.  A
  rail is 1 when that basis value is possible on the wire, so sums become
  OR on each rail.  The templates below are data; `dualrail.hpp` checks
  them against the gate catalog on every encoded input before first use.

  Gates whose output rail is constantly 1 get that constant as p OR q,
  which is 1 for every valid pair.
*/

#pragma once

#include <string_view>

#include "../gates.hpp"

namespace sbitlab::detail
{

inline std::string_view dualrail_template( gate_kind g )
{
  switch ( g )
  {
  case gate_kind::i:
    return "inputs p q\n"
           "outputs p q\n";
  case gate_kind::not_:
    return "inputs p q\n"
           "outputs q p\n";
  case gate_kind::and_:
    return "inputs a0 a1 b0 b1\n"
           "z = OR a0 b0\n"
           "o = AND a1 b1\n"
           "outputs z o\n";
  case gate_kind::or_:
    return "inputs a0 a1 b0 b1\n"
           "z = AND a0 b0\n"
           "o = OR a1 b1\n"
           "outputs z o\n";
  case gate_kind::xor_:
    return "inputs a0 a1 b0 b1\n"
           "a0x,a0y = FANOUT a0\n"
           "a1x,a1y = FANOUT a1\n"
           "b0x,b0y = FANOUT b0\n"
           "b1x,b1y = FANOUT b1\n"
           "m00 = AND a0x b0x\n"
           "m11 = AND a1x b1x\n"
           "m10 = AND a1y b0y\n"
           "m01 = AND a0y b1y\n"
           "z = OR m00 m11\n"
           "o = OR m10 m01\n"
           "outputs z o\n";
  case gate_kind::h:
    return "inputs p q\n"
           "t = OR p q\n"
           "u,v = FANOUT t\n"
           "outputs u v\n";
  case gate_kind::c0:
    return "inputs p q\n"
           "t = OR p q\n"
           "u,v = FANOUT t\n"
           "nv = NOT v\n"
           "outputs u nv\n";
  case gate_kind::c1:
    return "inputs p q\n"
           "t = OR p q\n"
           "u,v = FANOUT t\n"
           "nv = NOT v\n"
           "outputs nv u\n";
  case gate_kind::s0:
    return "inputs p q\n"
           "p1,p2 = FANOUT p\n"
           "z = OR p1 q\n"
           "outputs z p2\n";
  case gate_kind::s0bar:
    return "inputs p q\n"
           "q1,q2 = FANOUT q\n"
           "z = OR p q1\n"
           "outputs z q2\n";
  case gate_kind::s1:
    return "inputs p q\n"
           "p1,p2 = FANOUT p\n"
           "o = OR p2 q\n"
           "outputs p1 o\n";
  case gate_kind::s1bar:
    return "inputs p q\n"
           "q1,q2 = FANOUT q\n"
           "o = OR p q1\n"
           "outputs q2 o\n";
  case gate_kind::fanout:
    return "inputs p q\n"
           "p1,p2 = FANOUT p\n"
           "q1,q2 = FANOUT q\n"
           "outputs p1 q1 p2 q2\n";
  case gate_kind::t:
    return "inputs c0 c1 a0 a1 b0 b1\n"
           "c0x,c0y = FANOUT c0\n"
           "c1x,c1y = FANOUT c1\n"
           "za = AND c0x a0\n"
           "oa = AND c0y a1\n"
           "zb = AND c1x b0\n"
           "ob = AND c1y b1\n"
           "z = OR za zb\n"
           "o = OR oa ob\n"
           "outputs z o\n";
  default:
    // CONST0 and CONST1 have no inputs and are emitted directly
    return {};
  }
}

} // namespace sbitlab::detail
