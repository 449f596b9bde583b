#pragma once

#include "dicol/certificate.hpp"
#include "dicol/colouring.hpp"
#include "dicol/digraph.hpp"

namespace dicol {

struct DigraphConstruction {
  Digraph digraph;
  Colouring colouring;
  int k = 0;
  std::vector<CertEntry> certificate;
};

struct GraphConstruction {
  Graph graph;
  Colouring colouring;
  int k = 0;
  std::vector<CertEntry> certificate;
};

// 4-regular oriented digraph on 8 vertices whose 2-dicolouring has every
// vertex blocked.
DigraphConstruction frozen_4regular();

// Two directed paths of length n - 1 wired so that the alternating
// 2-colouring is frozen. Defined for n >= 2.
DigraphConstruction freezable_path_pair(int n);

// k directed paths with the pairwise wiring of freezable_path_pair applied
// to every ordered pair, giving a frozen k-dicolouring. n >= 2, k >= 2.
DigraphConstruction freezable_k(int n, int k);

// Recursive tower with out-degeneracy k and dichromatic number k + 1 on
// 2^(k+1) - 1 vertices, together with its canonical (k+1)-dicolouring.
DigraphConstruction out_degenerate_tower(int k);

// Transitive tournament on k + 2 vertices with a tower spliced into every
// arc. Its dicolouring graph on k + 1 colours is disconnected.
DigraphConstruction non_mixing_tower(int k);

// Oriented planar gadget on 10 vertices whose 2-dicolouring is frozen.
// Attaching a triangle through two consecutive gadget vertices pins an
// external vertex to one colour.
DigraphConstruction planar_freeze_gadget();

// Given a (d+1)-coloured d-regular graph whose colouring is frozen for
// bidirected redicolouring, and an r-regular bipartite graph h with
// r = |V(g_prev)|, produce a (d+1)-regular graph with a frozen (d+2)
// colouring. Girth does not drop below min(girth(g_prev), girth(h)).
GraphConstruction compose_freezable(const Graph& g_prev,
                                    const Colouring& frozen, const Graph& h);

// K_{r,r}: sides {0..r-1} and {r..2r-1}.
Graph complete_bipartite(int r);

}  // namespace dicol
