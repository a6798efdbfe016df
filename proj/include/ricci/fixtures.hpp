#pragma once

#include <span>
#include <string_view>

namespace ricci {

struct Fixture {
  const char* name;
  const char* edges;
  const char* labels;  // nullptr when the fixture has no ground truth
};

std::span<const Fixture> fixtures() noexcept;
const Fixture* find_fixture(std::string_view name) noexcept;

}  // namespace ricci
