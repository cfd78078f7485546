// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef CHANLAB_CHANNEL_SPEC_HPP
#define CHANLAB_CHANNEL_SPEC_HPP

#include "chanlab/channels.hpp"
#include "chanlab/serialize.hpp"

#include <string>
#include <vector>

namespace chanlab {

enum class ChannelFamily { PhaseDamping, Depolarizing, UpsilonK, Random, Identity };

/// A channel built from a textual spec such as "depolarizing:n=3,p=0.5", together with
/// the parameters it was built from.
struct NamedChannel {
  std::string spec;
  ChannelFamily family;
  Index n;
  double p = 0.0;                 // depolarizing, upsilon-k
  std::vector<double> lambda;     // phase-damping
  Index k = 0;                    // upsilon-k
  Index env = 0;                  // random
  std::uint64_t seed = 0;         // random
  Channel channel;
};

/// Grammar: name ":" key "=" value ("," key "=" value)*. Values of list-valued keys
/// (lambda) continue over bare comma-separated numbers.
///
///   phase-damping:n=4,lambda=0.4,0.3,0.2,0.1   (n optional, inferred from lambda)
///   depolarizing:n=3,p=0.5
///   upsilon-k:n=3,p=0.5,k=7
///   random:n=3,env=4,seed=42
///   identity:n=2
///
/// Throws ParseError for grammar, unknown names, unknown/missing/duplicate keys and bad
/// numbers; parameter values the constructors reject surface as DomainError.
NamedChannel parse_channel_spec(const std::string& spec);

}  // namespace chanlab

#endif  // CHANLAB_CHANNEL_SPEC_HPP
