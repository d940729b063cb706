// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/zip.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ontoweave {
namespace {

std::vector<zip::Entry> sample() {
  std::mt19937 rng(7);
  std::string noise(5000, '\0');
  for (auto& c : noise) c = static_cast<char>(rng());
  return {{"a.txt", "hello"},
          {"dir/empty", ""},
          {"dir/repeat.xml", std::string(20000, 'x') + "<end/>"},
          {"noise.bin", noise},
          {"ünïcode.txt", "ok"}};
}

TEST(Zip, Crc32KnownValue) {
  EXPECT_EQ(zip::crc32("123456789"), 0xCBF43926u);
  EXPECT_EQ(zip::crc32(""), 0u);
}

TEST(Zip, RoundTripBothMethods) {
  for (const auto method : {zip::Method::Stored, zip::Method::Deflate}) {
    const auto entries = sample();
    const auto back = zip::read(zip::write(entries, method));
    ASSERT_TRUE(back.ok());
    ASSERT_EQ(back->size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      EXPECT_EQ((*back)[i].name, entries[i].name);
      EXPECT_EQ((*back)[i].data, entries[i].data);
    }
  }
}

TEST(Zip, DeflateShrinksRepetitiveData) {
  const auto entries = sample();
  EXPECT_LT(zip::write(entries, zip::Method::Deflate).size(),
            zip::write(entries).size());
}

TEST(Zip, WriteIsDeterministic) {
  EXPECT_EQ(zip::write(sample()), zip::write(sample()));
}

TEST(Zip, FindByName) {
  const auto entries = sample();
  ASSERT_NE(zip::find(entries, "dir/empty"), nullptr);
  EXPECT_EQ(zip::find(entries, "missing"), nullptr);
}

TEST(Zip, RejectsBadInput) {
  for (const std::string bad :
       {std::string(), std::string("not a zip at all"), std::string(100, '\0')}) {
    const auto r = zip::read(bad);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.diagnostics[0].code, "E060");
  }
}

TEST(Zip, DetectsCorruption) {
  std::string bytes = zip::write({{"a.txt", "hello world"}});
  bytes[bytes.find("hello")] = 'j';
  EXPECT_FALSE(zip::read(bytes).ok());
  bytes = zip::write({{"a.txt", "hello world"}});
  EXPECT_FALSE(zip::read(bytes.substr(0, bytes.size() - 10)).ok());
}

}  // namespace
}  // namespace ontoweave
