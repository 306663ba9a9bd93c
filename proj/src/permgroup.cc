#include "lexidis/permgroup.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace lexidis
{

Permutation WreathElement::to_product() const
{
  Vertex nG = alpha.degree();
  if (betas.size() != nG)
    throw std::invalid_argument("wreath element needs one beta per vertex of G");
  Vertex nH = nG == 0 ? 0 : betas.front().degree();
  ProductIndexer idx(nG, nH);

  std::vector<Vertex> image(idx.order());
  for (Vertex g = 0; g < nG; ++g) {
    Vertex target = alpha(g);
    auto const &beta = betas[target];
    if (beta.degree() != nH)
      throw std::invalid_argument("wreath betas must share one degree");
    for (Vertex h = 0; h < nH; ++h)
      image[idx.encode(g, h)] = idx.encode(target, beta(h));
  }
  return Permutation(std::move(image));
}

GeneratorSet wreath_generators(GeneratorSet const &autG, GeneratorSet const &autH,
                               Vertex nG, Vertex nH)
{
  if (autG.degree != nG || autH.degree != nH)
    throw std::invalid_argument("generator degrees (" + std::to_string(autG.degree) +
                                ", " + std::to_string(autH.degree) +
                                ") do not match (" + std::to_string(nG) + ", " +
                                std::to_string(nH) + ")");
  autG.check();
  autH.check();

  ProductIndexer idx(nG, nH);
  GeneratorSet out{idx.order(), {}};

  for (auto const &alpha : autG.gens) {
    std::vector<Vertex> image(idx.order());
    for (Vertex g = 0; g < nG; ++g)
      for (Vertex h = 0; h < nH; ++h)
        image[idx.encode(g, h)] = idx.encode(alpha(g), h);
    out.gens.emplace_back(std::move(image));
  }
  for (auto const &beta : autH.gens) {
    for (Vertex copy = 0; copy < nG; ++copy) {
      std::vector<Vertex> img(idx.order());
      std::iota(img.begin(), img.end(), Vertex(0));
      for (Vertex h = 0; h < nH; ++h)
        img[idx.encode(copy, h)] = idx.encode(copy, beta(h));
      out.gens.emplace_back(std::move(img));
    }
  }
  return out;
}

GeneratorSet sij_generators(Graph const &G, Graph const &H)
{
  ProductIndexer idx(G.order(), H.order());
  GeneratorSet out{idx.order(), {}};

  auto comps = components(complement(H));
  if (comps.size() <= 1)
    return out;

  std::vector<std::size_t> comp_of(H.order());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex h : comps[c])
      comp_of[h] = c;

  for (auto const &cls : relation_S(G).classes) {
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        for (std::size_t c = 0; c < comps.size(); ++c) {
          std::vector<Vertex> img(idx.order());
          std::iota(img.begin(), img.end(), Vertex(0));
          for (Vertex h = 0; h < H.order(); ++h) {
            if (comp_of[h] == c)
              continue;
            img[idx.encode(cls[a], h)] = idx.encode(cls[b], h);
            img[idx.encode(cls[b], h)] = idx.encode(cls[a], h);
          }
          out.gens.emplace_back(std::move(img));
        }
      }
    }
  }
  return out;
}

bool sabidussi_equal(Graph const &G, Graph const &H)
{
  if (!relation_R(G).is_discrete() && !is_connected(H))
    return false;
  if (!relation_S(G).is_discrete() && !is_connected(complement(H)))
    return false;
  return true;
}

} // namespace lexidis
