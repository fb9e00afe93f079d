#pragma once

#include <optional>
#include <vector>

#include "acdkit/acd.hpp"
#include "acdkit/core.hpp"

namespace acdkit {

enum class Player : std::uint8_t { Eve, Adam };

inline Player opponent(Player p) { return p == Player::Eve ? Player::Adam : Player::Eve; }
inline Player owner_player(Owner o) { return o == Owner::Eve ? Player::Eve : Player::Adam; }

struct ParitySolution {
  std::vector<Player> winner;                 // per vertex
  std::vector<std::optional<EdgeId>> choice;  // owner's move where the owner wins
};

// Edge-priority parity game; the condition must be Parity and every vertex owned.
ParitySolution solve_parity_game(const System& g);

// True iff `player`'s positional choices win from every vertex of its region: the
// restricted subgraph stays in the region and all its loops have the player's parity.
bool verify_strategy(const System& g, const ParitySolution& sol, Player player);

struct MullerSolution {
  std::vector<Player> winner;  // per vertex of the game
  AcdTransform transform;
  ParitySolution transform_solution;
};

MullerSolution solve_muller_game(const System& g, const Limits& limits = {});

}  // namespace acdkit
