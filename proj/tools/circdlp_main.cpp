#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "circdlp/io.hpp"
#include "circdlp/numth.hpp"

using namespace circdlp;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

ParamSet load_params(const std::string& preset_name, const std::string& params_file) {
  if (!preset_name.empty() && !params_file.empty())
    throw Error("--preset and --params are mutually exclusive");
  if (!preset_name.empty()) return preset(preset_name);
  if (!params_file.empty()) return params_from_json(read_file(params_file));
  throw Error("one of --preset or --params is required");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

std::vector<std::pair<std::uint64_t, unsigned>> parse_factorization(const std::string& text) {
  // "3,11,31" or "3^2,5,7,13"
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string term = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t caret = term.find('^');
    std::uint64_t p = std::stoull(term.substr(0, caret));
    unsigned e = caret == std::string::npos ? 1 : static_cast<unsigned>(std::stoul(term.substr(caret + 1)));
    if (p < 2 || e < 1) throw ParseError("invalid factorization term: " + term);
    out.emplace_back(p, e);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ParseError("empty factorization");
  return out;
}

int cmd_gen_params(std::uint64_t p, unsigned k, unsigned d, unsigned min_order_bits,
                   std::uint64_t seed, const std::string& out_path) {
  FieldSpec spec = (p == 2 && k > 1) ? FieldSpec::binary(k) : (p == 2 ? FieldSpec::binary(1) : FieldSpec::prime(p));
  Rng rng(seed);
  ParamSet ps = generate_param_set(spec, d, rng, min_order_bits);
  emit(params_to_json(ps), out_path);
  if (!out_path.empty())
    std::cout << validation_report_to_json(ps, ps.checks);
  return ps.checks.all_passed() ? 0 : 1;
}

int cmd_validate(const std::string& preset_name, const std::string& params_file,
                 std::optional<unsigned> min_order_bits, const std::string& out_path) {
  ParamSet ps = load_params(preset_name, params_file);
  unsigned bits = min_order_bits.value_or(ps.min_order_bits);
  ConditionReport rep = validate_params(ps, bits);
  ps.checks = rep;
  ps.min_order_bits = bits;
  std::cout << validation_report_to_json(ps, rep);
  if (!out_path.empty()) write_file(out_path, params_to_json(ps));
  return rep.all_passed() ? 0 : 1;
}

int cmd_keygen(const std::string& preset_name, const std::string& params_file,
               std::uint64_t seed, unsigned exp_bits, const std::string& out_path) {
  ParamSet ps = load_params(preset_name, params_file);
  Rng rng(seed);
  KeyPair kp = keygen(ps, rng, exp_bits);
  emit(keypair_to_json(kp), out_path);
  return 0;
}

int cmd_dh_demo(const std::string& preset_name, const std::string& params_file,
                std::uint64_t seed, unsigned exp_bits) {
  ParamSet ps = load_params(preset_name, params_file);
  Rng rng(seed);
  KeyPair alice = keygen(ps, rng, exp_bits);
  KeyPair bob = keygen(ps, rng, exp_bits);
  Circulant shared_a = dh_shared(alice.secret, bob.public_key);
  Circulant shared_b = dh_shared(bob.secret, alice.public_key);
  bool identical = shared_a == shared_b;
  bool degenerate = shared_a == Circulant::identity(ps.spec, ps.d);
  std::printf("{\n");
  std::printf("  \"seed\": %llu,\n", static_cast<unsigned long long>(seed));
  std::printf("  \"d\": %u,\n", ps.d);
  std::printf("  \"alice_public_hex\": \"%s\",\n", alice.public_key.to_hex().c_str());
  std::printf("  \"bob_public_hex\": \"%s\",\n", bob.public_key.to_hex().c_str());
  std::printf("  \"shared_alice_hex\": \"%s\",\n", shared_a.to_hex().c_str());
  std::printf("  \"shared_bob_hex\": \"%s\",\n", shared_b.to_hex().c_str());
  std::printf("  \"identical\": %s,\n", identical ? "true" : "false");
  std::printf("  \"degenerate\": %s\n", degenerate ? "true" : "false");
  std::printf("}\n");
  return identical ? 0 : 1;
}

int cmd_encrypt(const std::string& key_file, const std::string& msg_text,
                const std::string& msg_hex, std::uint64_t seed, unsigned exp_bits,
                const std::string& out_path) {
  KeyPair kp = keypair_from_json(read_file(key_file));
  if (!msg_text.empty() && !msg_hex.empty()) throw Error("--msg and --msg-hex are mutually exclusive");
  Bytes msg = msg_hex.empty() ? Bytes(msg_text.begin(), msg_text.end()) : from_hex(msg_hex);
  Rng rng(seed);
  Ciphertext ct = elgamal_encrypt(kp.params, kp.public_key, msg, rng, exp_bits);
  Bytes wire = ct.to_bytes();
  if (out_path.empty()) {
    std::cout << to_hex(wire) << "\n";
  } else {
    write_binary_file(out_path, wire);
    std::printf("{ \"ciphertext_file\": \"%s\", \"bytes\": %zu }\n", out_path.c_str(), wire.size());
  }
  return 0;
}

int cmd_decrypt(const std::string& key_file, const std::string& ct_file,
                const std::string& ct_hex) {
  KeyPair kp = keypair_from_json(read_file(key_file));
  if (ct_file.empty() == ct_hex.empty()) throw Error("exactly one of --ct or --ct-hex is required");
  Bytes wire = ct_file.empty() ? from_hex(ct_hex) : read_binary_file(ct_file);
  Ciphertext ct = Ciphertext::from_bytes(kp.params.spec, wire);
  Bytes msg = elgamal_decrypt(kp, ct);
  std::printf("{ \"plaintext_hex\": \"%s\" }\n", to_hex(msg).c_str());
  return 0;
}

int cmd_attack(const std::string& instance_file, const std::string& key_file,
               const std::string& fac_text, const std::string& out_path) {
  if (instance_file.empty() == key_file.empty())
    throw Error("exactly one of --instance or --from-key is required");
  DlogInstance inst = [&] {
    if (!instance_file.empty()) return instance_from_json(read_file(instance_file));
    KeyPair kp = keypair_from_json(read_file(key_file));
    return DlogInstance{kp.params, kp.params.generator, kp.public_key, kp.secret};
  }();
  std::optional<std::vector<std::pair<std::uint64_t, unsigned>>> fac;
  if (!fac_text.empty()) fac = parse_factorization(fac_text);
  AttackReport rep = full_attack(inst, fac);
  emit(attack_report_to_json(rep), out_path);
  return 0;
}

int cmd_bench(const std::string& preset_name, const std::string& params_file, unsigned exp_bits,
              unsigned reps, std::uint64_t seed, const std::string& out_path) {
  ParamSet ps = load_params(preset_name, params_file);
  BenchReport rep = bench_exponentiation(ps, exp_bits, reps, seed);
  emit(bench_report_to_json(rep), out_path);
  return 0;
}

int cmd_square_perm(unsigned d) {
  SquarePermutation perm(d);
  for (unsigned j = 0; j < d; ++j) std::printf("%s%u", j ? " " : "", perm[j]);
  std::printf("\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "circdlp: discrete-logarithm cryptosystem over circulant matrices -- "
      "parameter validation, Diffie-Hellman/ElGamal demos, benchmarks and an attack lab"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string preset_name, params_file, out_path, key_file, msg_text, msg_hex, ct_file, ct_hex,
      instance_file, fac_text;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t qp = 2;
  unsigned qk = 1, d = 0, min_order_bits = 40, exp_bits = kDefaultExpBits, reps = 5,
           bench_exp_bits = 64;
  std::optional<unsigned> validate_bits;

  auto* gen = app.add_subcommand("gen-params", "generate and validate a parameter set");
  gen->add_option("--q-p", qp, "field characteristic p (default 2)");
  gen->add_option("--q-k", qk, "extension degree k (default 1)");
  gen->add_option("--d", d, "circulant dimension (prime)")->required();
  gen->add_option("--min-order-bits", min_order_bits, "generator order bound (default 40)");
  gen->add_option("--seed", seed, "randomness seed (default 1)");
  gen->add_option("--out", out_path, "write the parameter file here");

  auto* val = app.add_subcommand("validate", "check a parameter set against the six conditions");
  val->add_option("--preset", preset_name, "built-in preset name");
  val->add_option("--params", params_file, "parameter JSON file");
  val->add_option("--min-order-bits", validate_bits, "override the order bound");
  val->add_option("--out", out_path, "write the re-validated parameter file here");

  auto* kg = app.add_subcommand("keygen", "generate a key pair");
  kg->add_option("--preset", preset_name, "built-in preset name");
  kg->add_option("--params", params_file, "parameter JSON file");
  kg->add_option("--seed", seed, "randomness seed (default 1)");
  kg->add_option("--exp-bits", exp_bits, "secret exponent width (default 160)");
  kg->add_option("--out", out_path, "write the key file here");

  auto* dh = app.add_subcommand("dh-demo", "run a two-party key agreement and compare secrets");
  dh->add_option("--preset", preset_name, "built-in preset name");
  dh->add_option("--params", params_file, "parameter JSON file");
  dh->add_option("--seed", seed, "randomness seed (default 1)");
  dh->add_option("--exp-bits", exp_bits, "secret exponent width (default 160)");

  auto* enc = app.add_subcommand("encrypt", "ElGamal-encrypt a message block");
  enc->add_option("--key", key_file, "key JSON file (public part is used)")->required();
  enc->add_option("--msg", msg_text, "message as text");
  enc->add_option("--msg-hex", msg_hex, "message as hex");
  enc->add_option("--seed", seed, "randomness seed (default 1)");
  enc->add_option("--exp-bits", exp_bits, "nonce width (default 160)");
  enc->add_option("--out", out_path, "write wire-format ciphertext here");

  auto* dec = app.add_subcommand("decrypt", "decrypt a wire-format ciphertext");
  dec->add_option("--key", key_file, "key JSON file (secret part is used)")->required();
  dec->add_option("--ct", ct_file, "ciphertext file");
  dec->add_option("--ct-hex", ct_hex, "ciphertext as hex");

  auto* atk = app.add_subcommand("attack", "run the reduction chain against a DLP instance");
  atk->add_option("--instance", instance_file, "instance JSON file");
  atk->add_option("--from-key", key_file, "treat a key file as a known-answer instance");
  atk->add_option("--factorization", fac_text,
                  "factorization of q^(d-1)-1, e.g. \"3,11,31\" or \"3^2,5,7,13\"");
  atk->add_option("--out", out_path, "write the attack report here");

  auto* bench = app.add_subcommand("bench", "measure exponentiation counts and timing");
  bench->add_option("--preset", preset_name, "built-in preset name");
  bench->add_option("--params", params_file, "parameter JSON file");
  bench->add_option("--exp-bits", bench_exp_bits, "exponent width (default 64)");
  bench->add_option("--reps", reps, "timing repetitions, 0 = counts only (default 5)");
  bench->add_option("--seed", seed, "randomness seed (default 1)");
  bench->add_option("--out", out_path, "write the report here");

  auto* sq = app.add_subcommand("square-perm", "print the squaring permutation for odd d");
  sq->add_option("--d", d, "odd dimension >= 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // Usage problems exit 2; --help exits 0.
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen_params(qp, qk, d, min_order_bits, seed, out_path);
    if (val->parsed()) return cmd_validate(preset_name, params_file, validate_bits, out_path);
    if (kg->parsed()) return cmd_keygen(preset_name, params_file, seed, exp_bits, out_path);
    if (dh->parsed()) return cmd_dh_demo(preset_name, params_file, seed, exp_bits);
    if (enc->parsed()) return cmd_encrypt(key_file, msg_text, msg_hex, seed, exp_bits, out_path);
    if (dec->parsed()) return cmd_decrypt(key_file, ct_file, ct_hex);
    if (atk->parsed()) return cmd_attack(instance_file, key_file, fac_text, out_path);
    if (bench->parsed()) return cmd_bench(preset_name, params_file, bench_exp_bits, reps, seed, out_path);
    if (sq->parsed()) return cmd_square_perm(d);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
