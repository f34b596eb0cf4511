#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.h"
#include "test_util.h"
#include "xfer/checkpoint.h"
#include "xfer/error.h"

using namespace xfer;

namespace {

ModelCheckpoint sample_checkpoint() {
  std::unordered_map<std::string, std::int64_t> counts{{"get", 4}, {"User", 3}, {"save", 2}};
  ModelConfig c = oracle::tiny_config();
  ModelCheckpoint ck = ModelCheckpoint::fresh(c, Vocabulary::from_counts(counts, 1));
  ProvenanceEntry p;
  p.phase = PhaseKind::kPretrain;
  p.role = DatasetRole::kCommit;
  p.languages = {Language::kA, Language::kB};
  p.examples = 120;
  p.epochs = 4;
  p.best_epoch = 2;
  p.learning_rate = 5e-4;
  p.heldout_loss = 2.25;
  p.seed = 9;
  ck.provenance.push_back(p);
  return ck;
}

std::string serialized(const ModelCheckpoint& ck) {
  std::ostringstream out(std::ios::binary);
  ck.save(out);
  return out.str();
}

}  // namespace

TEST_CASE("checkpoint round trip is bit exact") {
  const ModelCheckpoint ck = sample_checkpoint();
  CHECK(ck.config.vocab_size == ck.vocab.size());
  testing::TempDir dir;
  const auto path = dir.path() / "sub" / "model.ckpt";
  ck.save(path);
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  const ModelCheckpoint back = ModelCheckpoint::load(path);
  CHECK(back.config == ck.config);
  CHECK(back.params == ck.params);
  CHECK(back.provenance == ck.provenance);
  CHECK(back.vocab == ck.vocab);
  CHECK(serialized(back) == serialized(ck));

  const std::vector<int> ids{67, 3, 70, 2, 5};
  const Matrix<float> a = ck.model().forward(ids);
  const Matrix<float> b = back.model().forward(ids);
  CHECK((a.array() == b.array()).all());
}

TEST_CASE("corrupt checkpoints raise FormatError") {
  const std::string bytes = serialized(sample_checkpoint());
  auto load_bytes = [](const std::string& s) {
    std::istringstream in(s, std::ios::binary);
    return ModelCheckpoint::load(in);
  };
  CHECK_NOTHROW(load_bytes(bytes));
  CHECK_THROWS_AS(load_bytes(""), FormatError);
  CHECK_THROWS_AS(load_bytes("NOTACKPT" + bytes.substr(8)), FormatError);
  CHECK_THROWS_AS(load_bytes(bytes.substr(0, bytes.size() - 3)), FormatError);
  CHECK_THROWS_AS(load_bytes(bytes.substr(0, 30)), FormatError);
  CHECK_THROWS_AS(load_bytes(bytes + "x"), FormatError);

  std::string bad_version = bytes;
  bad_version[8] = 7;
  CHECK_THROWS_AS(load_bytes(bad_version), FormatError);

  // Break the JSON header without changing its length.
  std::string bad_header = bytes;
  bad_header[20] = '@';
  CHECK_THROWS_AS(load_bytes(bad_header), FormatError);

  // A header claiming a different config than the payload provides.
  std::string wrong_shape = bytes;
  const auto pos = wrong_shape.find("\"d_ff\":32");
  REQUIRE(pos != std::string::npos);
  wrong_shape.replace(pos, 9, "\"d_ff\":48");
  CHECK_THROWS_AS(load_bytes(wrong_shape), FormatError);
}

TEST_CASE("checkpoint load reports the path") {
  testing::TempDir dir;
  const auto path = dir.path() / "broken.ckpt";
  std::ofstream(path) << "garbage";
  try {
    ModelCheckpoint::load(path);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("broken.ckpt") != std::string::npos);
  }
  CHECK_THROWS_AS(ModelCheckpoint::load(dir.path() / "missing.ckpt"), Error);
}

TEST_CASE("phase kind names round trip") {
  CHECK(parse_phase_kind(phase_kind_name(PhaseKind::kPretrain)) == PhaseKind::kPretrain);
  CHECK(parse_phase_kind(phase_kind_name(PhaseKind::kFinetune)) == PhaseKind::kFinetune);
  CHECK_THROWS_AS(parse_phase_kind("warmup"), InvalidArgument);
}
