#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skein/intmatrix.hpp"

namespace skein {

/// Cellular chain complex in degrees 0..3. d[k-1] is the boundary
/// C_k -> C_{k-1}, with rows indexed by (k-1)-cells.
struct ChainComplex {
  std::string name;
  std::array<std::size_t, 4> cells{};
  std::array<IntMatrix, 3> d;

  /// Checks shapes and d o d = 0; throws InvalidInput naming the composition.
  void validate() const;
  /// Boundary C_k -> C_{k-1}; the zero map outside 1..3.
  IntMatrix boundary(int k) const;
};

/// Finitely generated abelian group: Z^rank plus Z/t for each factor.
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  /// Order of a finite group; nullopt when rank > 0.
  std::optional<Integer> order() const;
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_k with integer coefficients (modulus 0) or Z/N coefficients.
HomologyGroup homology(const ChainComplex& c, int k, long modulus = 0);
/// Z/N homology from integral homology by universal coefficients.
HomologyGroup homology_universal_coefficients(const ChainComplex& c, int k, long modulus);
/// Z/N homology computed as cycles mod N over boundaries plus N Z^n.
HomologyGroup homology_direct(const ChainComplex& c, int k, long modulus);

/// A named chain on a fixed degree.
struct NamedChain {
  std::string label;
  std::vector<Integer> chain;
};

struct Manifold {
  std::string name;
  int genus = 0;
  ChainComplex complex;
  std::array<std::vector<std::string>, 4> cell_labels;
  /// Cycle representatives of a basis of H_1 and H_2 (torsion-free here).
  std::vector<NamedChain> h1_basis;
  std::vector<NamedChain> h2_basis;
  /// pairing(i, j) = <h2_basis[i], h1_basis[j]>; absent for user complexes.
  std::optional<IntMatrix> pairing;
};

/// Closed oriented product manifolds: "torus3", "sigma_g_x_s1" (genus >= 1),
/// "sphere2_x_s1".
Manifold registry(const std::string& name, int genus = 0);
std::vector<std::string> registry_names();

/// Reads `{"name", "cells": [n0..n3], "d1", "d2", "d3"}`.
ChainComplex parse_chain_complex(const std::string& json_text);
Manifold manifold_from_complex(ChainComplex c);

/// A Z/N-valued 1-chain whose boundary vanishes mod N.
struct CycleOne {
  long modulus = 0;
  std::vector<Integer> chain;
};

/// Reduces and checks the cycle condition; throws InvalidInput naming the
/// unbalanced 0-cell.
CycleOne make_cycle(const Manifold& m, std::vector<Integer> chain, long modulus);

struct PicardInfo {
  HomologyGroup pi0;
  HomologyGroup pi1;
  /// |pi1| == |H_1(M, dual coefficients)|.
  bool duality_cardinality_ok = false;
};

PicardInfo picard(const Manifold& m, long modulus);

/// A 2-chain eta with d eta = b - a mod N, or nullopt.
std::optional<std::vector<Integer>> homologous(const Manifold& m, const CycleOne& a, const CycleOne& b);

/// Coordinates of a cycle against h1_basis (degree 1) or h2_basis (degree 2), mod N.
std::vector<Integer> class_coordinates(const Manifold& m, int degree, const std::vector<Integer>& cycle, long modulus);

/// <sigma, gamma> mod N from stored pairing data.
Integer intersection_pairing(const Manifold& m, const std::vector<Integer>& sigma_coords,
                             const std::vector<Integer>& gamma_coords, long modulus);

}  // namespace skein
