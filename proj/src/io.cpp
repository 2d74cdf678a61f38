#include "circdlp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace circdlp {

using json = nlohmann::ordered_json;

namespace {

json checks_to_json(const ConditionReport& c) {
  json j;
  j["det_is_one"] = c.det_is_one;
  j["row_sum_is_one"] = c.row_sum_is_one;
  j["quotient_irreducible"] = c.quotient_irreducible;
  j["dimension_prime"] = c.dimension_prime;
  j["representer_at_one_is_one"] = c.representer_at_one_is_one;
  j["q_primitive_mod_d"] = c.q_primitive_mod_d;
  j["gcd_d_q_is_one"] = c.gcd_d_q_is_one;
  j["generator_invertible"] = c.generator_invertible;
  j["generator_order_ok"] = c.generator_order_ok;
  return j;
}

ConditionReport checks_from_json(const json& j) {
  ConditionReport c;
  if (!j.is_object()) return c;
  auto get = [&](const char* key) { return j.contains(key) && j[key].is_boolean() && j[key].get<bool>(); };
  c.det_is_one = get("det_is_one");
  c.row_sum_is_one = get("row_sum_is_one");
  c.quotient_irreducible = get("quotient_irreducible");
  c.dimension_prime = get("dimension_prime");
  c.representer_at_one_is_one = get("representer_at_one_is_one");
  c.q_primitive_mod_d = get("q_primitive_mod_d");
  c.gcd_d_q_is_one = get("gcd_d_q_is_one");
  c.generator_invertible = get("generator_invertible");
  c.generator_order_ok = get("generator_order_ok");
  return c;
}

json params_to_json_obj(const ParamSet& ps) {
  json j;
  j["q_p"] = ps.spec.p();
  j["q_k"] = ps.spec.k();
  j["modulus_hex"] = ps.spec.modulus_hex();
  j["d"] = ps.d;
  j["generator_hex"] = ps.generator.to_hex();
  j["min_order_bits"] = ps.min_order_bits;
  j["checks"] = checks_to_json(ps.checks);
  return j;
}

ParamSet params_from_json_obj(const json& j) {
  std::uint64_t p = j.at("q_p").get<std::uint64_t>();
  unsigned k = j.at("q_k").get<unsigned>();
  FieldSpec spec = FieldSpec::binary(1);
  if (p == 2 && k > 1) {
    std::string mh = j.at("modulus_hex").get<std::string>();
    spec = mh.empty() ? FieldSpec::binary(k)
                      : FieldSpec::binary(k, FieldSpec::modulus_low_from_hex(k, mh));
  } else if (p == 2) {
    spec = FieldSpec::binary(1);
  } else {
    if (k != 1) throw ParseError("odd characteristic requires q_k = 1");
    spec = FieldSpec::prime(p);
  }
  unsigned d = j.at("d").get<unsigned>();
  Circulant gen = Circulant::from_hex(spec, j.at("generator_hex").get<std::string>());
  if (gen.d() != d) throw ParseError("generator dimension disagrees with d");
  unsigned min_order_bits = j.contains("min_order_bits") ? j["min_order_bits"].get<unsigned>() : 40;
  ParamSet ps(spec, d, build_psi(d, spec), std::move(gen), min_order_bits);
  if (j.contains("checks")) ps.checks = checks_from_json(j["checks"]);
  return ps;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

}  // namespace

std::string params_to_json(const ParamSet& ps) { return dump(params_to_json_obj(ps)); }

ParamSet params_from_json(const std::string& text) { return params_from_json_obj(parse(text)); }

std::string keypair_to_json(const KeyPair& kp) {
  json j = params_to_json_obj(kp.params);
  j["secret_m_hex"] = kp.secret.to_hex();
  j["public_hex"] = kp.public_key.to_hex();
  return dump(j);
}

KeyPair keypair_from_json(const std::string& text) {
  json j = parse(text);
  ParamSet ps = params_from_json_obj(j);
  BigUint secret = BigUint::from_hex(j.at("secret_m_hex").get<std::string>());
  Circulant pub = Circulant::from_hex(ps.spec, j.at("public_hex").get<std::string>());
  return {std::move(ps), std::move(secret), std::move(pub)};
}

std::string instance_to_json(const DlogInstance& inst) {
  json j = params_to_json_obj(inst.params);
  j["base_hex"] = inst.base.to_hex();
  j["target_hex"] = inst.target.to_hex();
  if (inst.true_m) j["true_m_hex"] = inst.true_m->to_hex();
  return dump(j);
}

DlogInstance instance_from_json(const std::string& text) {
  json j = parse(text);
  ParamSet ps = params_from_json_obj(j);
  Circulant base = Circulant::from_hex(ps.spec, j.at("base_hex").get<std::string>());
  Circulant target = Circulant::from_hex(ps.spec, j.at("target_hex").get<std::string>());
  std::optional<BigUint> true_m;
  if (j.contains("true_m_hex")) true_m = BigUint::from_hex(j["true_m_hex"].get<std::string>());
  return {std::move(ps), std::move(base), std::move(target), std::move(true_m)};
}

std::string validation_report_to_json(const ParamSet& ps, const ConditionReport& rep) {
  json j;
  j["q_p"] = ps.spec.p();
  j["q_k"] = ps.spec.k();
  j["d"] = ps.d;
  j["min_order_bits"] = ps.min_order_bits;
  j["conditions"] = checks_to_json(rep);
  json order;
  order["exact"] = rep.order_exact;
  if (rep.order_exact) order["order"] = rep.exact_order;
  if (!rep.order_exact) {
    order["smooth_bits"] = rep.smooth_bits;
    order["cofactor_bits"] = rep.cofactor_bits;
    order["survived_smooth_power"] = rep.survived_smooth_power;
  }
  j["order_evidence"] = order;
  j["notes"] = rep.notes;
  j["pass"] = rep.all_passed();
  return dump(j);
}

std::string attack_report_to_json(const AttackReport& rep) {
  json j;
  json leaks = json::array();
  for (const auto& leak : rep.leaks) {
    json l;
    l["name"] = leak.name;
    l["blocked"] = leak.blocked;
    l["recovered"] = leak.recovered;
    if (leak.recovered) {
      l["residue"] = leak.residue;
      l["modulus"] = leak.modulus;
      l["matches_true_m"] = leak.matches_true_m;
    }
    l["group_mults"] = leak.group_mults;
    if (!leak.note.empty()) l["note"] = leak.note;
    leaks.push_back(std::move(l));
  }
  j["leaks"] = std::move(leaks);
  if (rep.combined_valid) {
    json c;
    c["residue"] = rep.combined_residue;
    c["modulus"] = rep.combined_modulus;
    j["combined"] = std::move(c);
  } else {
    j["combined"] = nullptr;
  }
  if (rep.base_order)
    j["base_order"] = *rep.base_order;
  else
    j["base_order"] = nullptr;
  j["verified"] = rep.verified;
  j["success"] = rep.success;
  json work;
  work["field_adds"] = rep.work.field_adds;
  work["field_mults"] = rep.work.field_mults;
  work["field_squares"] = rep.work.field_squares;
  work["group_mults"] = rep.work.group_mults;
  j["work"] = std::move(work);
  return dump(j);
}

namespace {
json counts_to_json(const OpCounts& c) {
  json j;
  j["field_adds"] = c.field_adds;
  j["field_mults"] = c.field_mults;
  j["field_squares"] = c.field_squares;
  j["group_mults"] = c.group_mults;
  return j;
}
}  // namespace

std::string bench_report_to_json(const BenchReport& rep) {
  json j;
  j["seed"] = rep.seed;
  j["q_p"] = rep.q_p;
  j["q_k"] = rep.q_k;
  j["d"] = rep.d;
  j["exp_bits"] = rep.exp_bits;
  j["reps"] = rep.reps;
  j["fast_square_path"] = rep.fast_square_path;
  j["single_mul_generic"] = counts_to_json(rep.mul_generic_counts);
  if (rep.square_fast_counts)
    j["single_square_fast"] = counts_to_json(*rep.square_fast_counts);
  else
    j["single_square_fast"] = nullptr;
  json expo;
  expo["counts"] = counts_to_json(rep.expo_counts);
  expo["predicted_squarings"] = rep.predicted_squarings;
  expo["predicted_multiplies"] = rep.predicted_multiplies;
  if (rep.fast_square_path) {
    expo["measured_squarings"] = rep.measured_squarings;
    expo["measured_multiplies"] = rep.measured_multiplies;
  } else {
    expo["measured_square_or_mul"] = rep.measured_square_or_mul;
  }
  expo["model_ok"] = rep.model_ok;
  j["exponentiation"] = std::move(expo);
  if (rep.mul_ns) {
    json t;
    t["mul_generic_ns"] = *rep.mul_ns;
    if (rep.square_ns) t["square_fast_ns"] = *rep.square_ns;
    t["exponentiation_ns"] = *rep.expo_ns;
    j["timing_median"] = std::move(t);
  } else {
    j["timing_median"] = nullptr;
  }
  json analytic;
  analytic["normal_basis_field_mult_complexity"] = rep.onb_mult_complexity;
  analytic["circulant_ring_mult_complexity"] = rep.circulant_mult_complexity;
  analytic["security_field_bits"] = rep.security_field_bits;
  analytic["note"] = "quoted optimal-normal-basis bound vs circulant ring; analytic, not measured";
  j["analytic"] = std::move(analytic);
  return dump(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

Bytes read_binary_file(const std::string& path) {
  std::string s = read_file(path);
  return Bytes(s.begin(), s.end());
}

void write_binary_file(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

}  // namespace circdlp
