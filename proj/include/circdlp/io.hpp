#ifndef CIRCDLP_IO_HPP
#define CIRCDLP_IO_HPP

#include <string>

#include "circdlp/attack.hpp"
#include "circdlp/bench.hpp"
#include "circdlp/params.hpp"
#include "circdlp/protocol.hpp"

namespace circdlp {

/// JSON renderings of the documented file formats. All hex is lowercase;
/// serialization is deterministic (fixed key order, two-space indent).

std::string params_to_json(const ParamSet& ps);
ParamSet params_from_json(const std::string& text);

std::string keypair_to_json(const KeyPair& kp);
KeyPair keypair_from_json(const std::string& text);

std::string instance_to_json(const DlogInstance& inst);
DlogInstance instance_from_json(const std::string& text);

std::string validation_report_to_json(const ParamSet& ps, const ConditionReport& rep);
std::string attack_report_to_json(const AttackReport& rep);
std::string bench_report_to_json(const BenchReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
Bytes read_binary_file(const std::string& path);
void write_binary_file(const std::string& path, const Bytes& data);

}  // namespace circdlp

#endif  // CIRCDLP_IO_HPP
