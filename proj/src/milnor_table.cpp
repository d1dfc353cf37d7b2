#include "anyonwalk/milnor_table.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "anyonwalk/linkinv.hpp"

namespace anyonwalk {

const MilnorGroup& MilnorGroup::instance() {
  static const MilnorGroup group;
  return group;
}

MilnorGroup::MilnorGroup() {
  const CycScalar z = CycScalar::zeta(1);
  const CycMat2 left = milnor_left_generator().scaled(z);
  const CycMat2 right = milnor_right_generator().scaled(z);
  const std::array<CycMat2, 4> gens{left, left.adjoint(), right, right.adjoint()};

  std::map<std::string, Id> index;
  auto intern = [&](const CycMat2& m) -> std::pair<Id, bool> {
    const std::string key = m.to_string();
    if (auto it = index.find(key); it != index.end()) return {it->second, false};
    if (elements_.size() >= 0xFFFF) throw std::logic_error("Milnor group larger than expected");
    const auto id = static_cast<Id>(elements_.size());
    elements_.push_back(m);
    index.emplace(key, id);
    return {id, true};
  };

  identity_ = intern(CycMat2::identity()).first;
  std::deque<Id> frontier{identity_};
  std::vector<std::array<Id, 4>> table;
  while (!frontier.empty()) {
    const Id g = frontier.front();
    frontier.pop_front();
    if (table.size() <= g) table.resize(static_cast<std::size_t>(g) + 1);
    for (std::size_t k = 0; k < 4; ++k) {
      auto [id, fresh] = intern(gens[k] * elements_[g]);
      table[g][k] = id;
      if (fresh) frontier.push_back(id);
    }
  }
  table.resize(elements_.size());
  table_ = std::move(table);

  negation_.resize(elements_.size());
  for (std::size_t g = 0; g < elements_.size(); ++g) {
    auto it = index.find((-elements_[g]).to_string());
    if (it == index.end()) throw std::logic_error("Milnor group is not closed under negation");
    negation_[g] = it->second;
  }
}

}  // namespace anyonwalk
