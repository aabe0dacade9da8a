#include "sandplate/goldens.hpp"

#include <stdexcept>

namespace sandplate::goldens {

const ConvergenceGolden& single_layer_convergence() {
  static const ConvergenceGolden g = {
      {4, 6, 8, 16},
      {{{3.0174, 3.0018, 2.9993, 2.9993},
        {4.0418, 4.0209, 4.0176, 4.0176},
        {2.2710, 2.2593, 2.2574, 2.2574}}},
      {{{3.0172, 3.0017, 2.9873, 2.9873},
        {4.0959, 4.0748, 4.0552, 4.0552},
        {2.2764, 2.2647, 2.2538, 2.2538}}},
      {3.0010, 4.0250, 2.2560},
  };
  return g;
}

const std::array<StaticCase, 4>& sandwich_static_v17() {
  static const std::array<StaticCase, 4> g = {{
      {5.0, 2.0, 0.17,
       {{{"HSDT13", 0.5463, 0.1036, 0.4476, 0.4021},
         {"HSDT11A", 0.5617, 0.1084, 0.4715, 0.3985},
         {"HSDT11B", 0.6701, 0.0813, 0.5496, 0.3960},
         {"HSDT9", 0.6883, 0.0847, 0.5747, 0.3926},
         {"TSDT7", 0.9108, 0.0744, 0.7578, 0.3798},
         {"FSDT5", 0.9042, 0.0773, 0.7525, 0.3791}}}},
      {5.0, 6.0, 0.17,
       {{{"HSDT13", 0.5275, 0.0533, 0.4247, 0.3154},
         {"HSDT11A", 0.5390, 0.0557, 0.4491, 0.3147},
         {"HSDT11B", 0.6725, 0.0504, 0.5448, 0.3168},
         {"HSDT9", 0.6887, 0.0526, 0.5727, 0.3162},
         {"TSDT7", 0.6840, 0.0523, 0.5687, 0.3155},
         {"FSDT5", 0.6800, 0.0538, 0.5654, 0.3149}}}},
      {10.0, 2.0, 0.17,
       {{{"HSDT13", 0.8132, 0.0738, 0.6717, 0.3906},
         {"HSDT11A", 0.8189, 0.0749, 0.6819, 0.3891},
         {"HSDT11B", 0.8663, 0.0658, 0.7155, 0.3884},
         {"HSDT9", 0.8721, 0.0668, 0.7255, 0.3870},
         {"TSDT7", 0.9359, 0.0637, 0.7779, 0.3828},
         {"FSDT5", 0.9341, 0.0645, 0.7765, 0.3826}}}},
      {10.0, 6.0, 0.17,
       {{{"HSDT13", 0.6535, 0.0470, 0.5383, 0.3183},
         {"HSDT11A", 0.6574, 0.0477, 0.5466, 0.3179},
         {"HSDT11B", 0.6968, 0.0461, 0.5738, 0.3188},
         {"HSDT9", 0.7010, 0.0468, 0.5827, 0.3184},
         {"TSDT7", 0.6994, 0.0467, 0.5813, 0.3181},
         {"FSDT5", 0.6983, 0.0471, 0.5804, 0.3179}}}},
  }};
  return g;
}

const std::array<StaticCase, 4>& sandwich_static_v28() {
  static const std::array<StaticCase, 4> g = {{
      {5.0, 2.0, 0.28,
       {{{"HSDT13", 0.3603, 0.0906, 0.4809, 0.3970},
         {"HSDT11A", 0.3705, 0.0945, 0.5058, 0.3933},
         {"HSDT11B", 0.4343, 0.0659, 0.5800, 0.3903},
         {"HSDT9", 0.4456, 0.0683, 0.6051, 0.3870},
         {"TSDT7", 0.6314, 0.0573, 0.8542, 0.3724},
         {"FSDT5", 0.6260, 0.0604, 0.8472, 0.3715}}}},
      {5.0, 6.0, 0.28,
       {{{"HSDT13", 0.4118, 0.0481, 0.5378, 0.3167},
         {"HSDT11A", 0.4201, 0.0502, 0.5691, 0.3160},
         {"HSDT11B", 0.5486, 0.0441, 0.7220, 0.3186},
         {"HSDT9", 0.5610, 0.0458, 0.7585, 0.3180},
         {"TSDT7", 0.5671, 0.0455, 0.7666, 0.3167},
         {"FSDT5", 0.5626, 0.0471, 0.7606, 0.3158}}}},
      {10.0, 2.0, 0.28,
       {{{"HSDT13", 0.5584, 0.0574, 0.7496, 0.3846},
         {"HSDT11A", 0.5624, 0.0583, 0.7614, 0.3830},
         {"HSDT11B", 0.5940, 0.0485, 0.7973, 0.3821},
         {"HSDT9", 0.5979, 0.0492, 0.8086, 0.3807},
         {"TSDT7", 0.6519, 0.0458, 0.8810, 0.3760},
         {"FSDT5", 0.6504, 0.0466, 0.8791, 0.3757}}}},
      {10.0, 6.0, 0.28,
       {{{"HSDT13", 0.5375, 0.0404, 0.7190, 0.3205},
         {"HSDT11A", 0.5406, 0.0410, 0.7307, 0.3201},
         {"HSDT11B", 0.5801, 0.0391, 0.7764, 0.3212},
         {"HSDT9", 0.5835, 0.0397, 0.7885, 0.3208},
         {"TSDT7", 0.5848, 0.0396, 0.7902, 0.3202},
         {"FSDT5", 0.5835, 0.0400, 0.7885, 0.3199}}}},
  }};
  return g;
}

const std::array<StaticCase, 4>& sandwich_thermal_v17() {
  static const std::array<StaticCase, 4> g = {{
      {5.0, 2.0, 0.17,
       {{{"HSDT13", 0.1357, 0.6106, 0.1133, 0.0893},
         {"HSDT11A", 0.1350, 0.6149, 0.1121, 0.0846},
         {"HSDT11B", 0.1308, 0.6953, 0.1093, 0.0886},
         {"HSDT9", 0.1305, 0.6965, 0.1084, 0.0839},
         {"TSDT7", 0.1206, 0.7417, 0.1003, 0.0836},
         {"FSDT5", 0.1209, 0.7383, 0.1005, 0.0837}}}},
      {5.0, 6.0, 0.17,
       {{{"HSDT13", 0.0907, 0.3786, 0.0757, 0.0620},
         {"HSDT11A", 0.0901, 0.3755, 0.0748, 0.0532},
         {"HSDT11B", 0.0730, 0.4137, 0.0610, 0.0612},
         {"HSDT9", 0.0730, 0.4108, 0.0607, 0.0525},
         {"TSDT7", 0.0682, 0.4089, 0.0567, 0.0525},
         {"FSDT5", 0.0688, 0.4075, 0.0571, 0.0527}}}},
      {10.0, 2.0, 0.17,
       {{{"HSDT13", 0.1242, 0.7070, 0.1038, 0.0308},
         {"HSDT11A", 0.1243, 0.7122, 0.1033, 0.0306},
         {"HSDT11B", 0.1222, 0.7376, 0.1021, 0.0303},
         {"HSDT9", 0.1224, 0.7409, 0.1018, 0.0301},
         {"TSDT7", 0.1196, 0.7545, 0.0994, 0.0298},
         {"FSDT5", 0.1197, 0.7536, 0.0995, 0.0298}}}},
      {10.0, 6.0, 0.17,
       {{{"HSDT13", 0.0725, 0.4035, 0.0606, 0.0159},
         {"HSDT11A", 0.0725, 0.4042, 0.0603, 0.0147},
         {"HSDT11B", 0.0672, 0.4143, 0.0562, 0.0155},
         {"HSDT9", 0.0673, 0.4149, 0.0560, 0.0143},
         {"TSDT7", 0.0661, 0.4144, 0.0550, 0.0141},
         {"FSDT5", 0.0663, 0.4140, 0.0551, 0.0142}}}},
  }};
  return g;
}

const std::array<StaticCase, 4>& sandwich_thermal_v28() {
  static const std::array<StaticCase, 4> g = {{
      {5.0, 2.0, 0.28,
       {{{"HSDT13", 0.1145, 0.5642, 0.1552, 0.1155},
         {"HSDT11A", 0.1142, 0.5672, 0.1542, 0.1111},
         {"HSDT11B", 0.1123, 0.6351, 0.1523, 0.1149},
         {"HSDT9", 0.1121, 0.6348, 0.1515, 0.1105},
         {"TSDT7", 0.1076, 0.6615, 0.1454, 0.1104},
         {"FSDT5", 0.1077, 0.6581, 0.1456, 0.1105}}}},
      {5.0, 6.0, 0.28,
       {{{"HSDT13", 0.0870, 0.3884, 0.1179, 0.0768},
         {"HSDT11A", 0.0868, 0.3863, 0.1172, 0.0683},
         {"HSDT11B", 0.0748, 0.4246, 0.1014, 0.0761},
         {"HSDT9", 0.0749, 0.4228, 0.1012, 0.0675},
         {"TSDT7", 0.0709, 0.4237, 0.0958, 0.0675},
         {"FSDT5", 0.0713, 0.4217, 0.0964, 0.0677}}}},
      {10.0, 2.0, 0.28,
       {{{"HSDT13", 0.1090, 0.6379, 0.1478, 0.0438},
         {"HSDT11A", 0.1092, 0.6425, 0.1476, 0.0436},
         {"HSDT11B", 0.1079, 0.6633, 0.1464, 0.0433},
         {"HSDT9", 0.1082, 0.6662, 0.1463, 0.0432},
         {"TSDT7", 0.1069, 0.6744, 0.1445, 0.0430},
         {"FSDT5", 0.1069, 0.6735, 0.1446, 0.0430}}}},
      {10.0, 6.0, 0.28,
       {{{"HSDT13", 0.0736, 0.4186, 0.0998, 0.0229},
         {"HSDT11A", 0.0738, 0.4199, 0.0997, 0.0217},
         {"HSDT11B", 0.0698, 0.4304, 0.0946, 0.0224},
         {"HSDT9", 0.0700, 0.4315, 0.0946, 0.0212},
         {"TSDT7", 0.0690, 0.4318, 0.0932, 0.0211},
         {"FSDT5", 0.0691, 0.4312, 0.0934, 0.0211}}}},
  }};
  return g;
}

const std::array<ModalValidationCase, 12>& modal_validation() {
  static const std::array<ModalValidationCase, 12> g = {{
      {300.0, 4.0, 0.12,
       {{{"HSDT13", 4.6518}, {"HSDT11A", 4.6508}, {"HSDT11B", 4.6803},
         {"HSDT9", 4.6793}, {"TSDT7", 4.6808}, {"FSDT5", 4.6765}}},
       4.6845},
      {300.0, 4.0, 0.17,
       {{{"HSDT13", 5.0381}, {"HSDT11A", 5.0366}, {"HSDT11B", 5.0683},
         {"HSDT9", 5.0669}, {"TSDT7", 5.0697}, {"FSDT5", 5.0639}}},
       5.0763},
      {300.0, 4.0, 0.28,
       {{{"HSDT13", 5.6422}, {"HSDT11A", 5.6394}, {"HSDT11B", 5.6980},
         {"HSDT9", 5.6955}, {"TSDT7", 5.7025}, {"FSDT5", 5.6935}}},
       5.7131},
      {300.0, 6.0, 0.12,
       {{{"HSDT13", 4.8992}, {"HSDT11A", 4.8980}, {"HSDT11B", 4.9111},
         {"HSDT9", 4.9099}, {"TSDT7", 4.9111}, {"FSDT5", 4.9066}}},
       4.9119},
      {300.0, 6.0, 0.17,
       {{{"HSDT13", 5.1753}, {"HSDT11A", 5.1737}, {"HSDT11B", 5.1886},
         {"HSDT9", 5.1871}, {"TSDT7", 5.1881}, {"FSDT5", 5.1826}}},
       5.1905},
      {300.0, 6.0, 0.28,
       {{{"HSDT13", 5.6278}, {"HSDT11A", 5.6253}, {"HSDT11B", 5.6534},
         {"HSDT9", 5.6510}, {"TSDT7", 5.6524}, {"FSDT5", 5.6448}}},
       5.6569},
      {500.0, 4.0, 0.12,
       {{{"HSDT13", 4.4425}, {"HSDT11A", 4.4416}, {"HSDT11B", 4.4809},
         {"HSDT9", 4.4801}, {"TSDT7", 4.4819}, {"FSDT5", 4.4776}}},
       4.4853},
      {500.0, 4.0, 0.17,
       {{{"HSDT13", 4.8244}, {"HSDT11A", 4.8232}, {"HSDT11B", 4.8658},
         {"HSDT9", 4.8647}, {"TSDT7", 4.8681}, {"FSDT5", 4.8623}}},
       4.8743},
      {500.0, 4.0, 0.28,
       {{{"HSDT13", 5.4238}, {"HSDT11A", 5.4216}, {"HSDT11B", 5.5005},
         {"HSDT9", 5.4985}, {"TSDT7", 5.5075}, {"FSDT5", 5.4982}}},
       5.5180},
      {500.0, 6.0, 0.12,
       {{{"HSDT13", 4.6662}, {"HSDT11A", 4.6651}, {"HSDT11B", 4.6823},
         {"HSDT9", 4.6813}, {"TSDT7", 4.6824}, {"FSDT5", 4.6779}}},
       4.6831},
      {500.0, 6.0, 0.17,
       {{{"HSDT13", 4.9408}, {"HSDT11A", 4.9395}, {"HSDT11B", 4.9590},
         {"HSDT9", 4.9577}, {"TSDT7", 4.9587}, {"FSDT5", 4.9533}}},
       4.9609},
      {500.0, 6.0, 0.28,
       {{{"HSDT13", 5.3956}, {"HSDT11A", 5.3936}, {"HSDT11B", 5.4308},
         {"HSDT9", 5.4289}, {"TSDT7", 5.4305}, {"FSDT5", 5.4227}}},
       5.4350},
  }};
  return g;
}

const std::array<ModalSweepCase, 12>& modal_thickness_sweep() {
  static const std::array<ModalSweepCase, 12> g = {{
      {5.0, 2.0, 0.12,
       {{{"HSDT13", 3.3961}, {"HSDT11A", 3.3858}, {"HSDT11B", 3.8434},
         {"HSDT9", 3.8381}, {"TSDT7", 4.0745}, {"FSDT5", 4.0164}}}},
      {5.0, 2.0, 0.17,
       {{{"HSDT13", 3.7815}, {"HSDT11A", 3.7714}, {"HSDT11B", 4.2602},
         {"HSDT9", 4.2554}, {"TSDT7", 4.5394}, {"FSDT5", 4.4561}}}},
      {5.0, 2.0, 0.28,
       {{{"HSDT13", 4.0457}, {"HSDT11A", 4.0327}, {"HSDT11B", 4.7377},
         {"HSDT9", 4.7318}, {"TSDT7", 5.1622}, {"FSDT5", 5.0308}}}},
      {5.0, 6.0, 0.12,
       {{{"HSDT13", 4.4193}, {"HSDT11A", 4.4058}, {"HSDT11B", 4.5334},
         {"HSDT9", 4.5212}, {"TSDT7", 4.5365}, {"FSDT5", 4.4820}}}},
      {5.0, 6.0, 0.17,
       {{{"HSDT13", 4.6221}, {"HSDT11A", 4.6097}, {"HSDT11B", 4.7512},
         {"HSDT9", 4.7402}, {"TSDT7", 4.7534}, {"FSDT5", 4.6891}}}},
      {5.0, 6.0, 0.28,
       {{{"HSDT13", 4.8681}, {"HSDT11A", 4.8560}, {"HSDT11B", 5.0871},
         {"HSDT9", 5.0774}, {"TSDT7", 5.0935}, {"FSDT5", 5.0097}}}},
      {10.0, 2.0, 0.12,
       {{{"HSDT13", 4.0191}, {"HSDT11A", 4.0166}, {"HSDT11B", 4.2753},
         {"HSDT9", 4.2739}, {"TSDT7", 4.3659}, {"FSDT5", 4.3472}}}},
      {10.0, 2.0, 0.17,
       {{{"HSDT13", 4.5719}, {"HSDT11A", 4.5688}, {"HSDT11B", 4.8382},
         {"HSDT9", 4.8364}, {"TSDT7", 4.9522}, {"FSDT5", 4.9238}}}},
      {10.0, 2.0, 0.28,
       {{{"HSDT13", 5.1744}, {"HSDT11A", 5.1689}, {"HSDT11B", 5.6273},
         {"HSDT9", 5.6240}, {"TSDT7", 5.8245}, {"FSDT5", 5.7744}}}},
      {10.0, 6.0, 0.12,
       {{{"HSDT13", 4.7838}, {"HSDT11A", 4.7798}, {"HSDT11B", 4.8264},
         {"HSDT9", 4.8225}, {"TSDT7", 4.8271}, {"FSDT5", 4.8100}}}},
      {10.0, 6.0, 0.17,
       {{{"HSDT13", 5.0419}, {"HSDT11A", 5.0378}, {"HSDT11B", 5.0895},
         {"HSDT9", 5.0857}, {"TSDT7", 5.0897}, {"FSDT5", 5.0691}}}},
      {10.0, 6.0, 0.28,
       {{{"HSDT13", 5.4336}, {"HSDT11A", 5.4289}, {"HSDT11B", 5.5223},
         {"HSDT9", 5.5182}, {"TSDT7", 5.5232}, {"FSDT5", 5.4952}}}},
  }};
  return g;
}

const std::array<ModalTemperatureCase, 8>& modal_temperature_sweep() {
  static const std::array<ModalTemperatureCase, 8> g = {{
      {5.0, "UD", 300.0,
       {{{"HSDT13", 3.8203}, {"HSDT11A", 3.8108}, {"HSDT11B", 4.1736},
         {"HSDT9", 4.1677}, {"TSDT7", 4.3199}, {"FSDT5", 4.2504}}}},
      {5.0, "UD", 500.0,
       {{{"HSDT13", 3.5588}, {"HSDT11A", 3.5492}, {"HSDT11B", 3.9680},
         {"HSDT9", 3.9623}, {"TSDT7", 4.1501}, {"FSDT5", 4.0789}}}},
      {5.0, "FG", 300.0,
       {{{"HSDT13", 3.7815}, {"HSDT11A", 3.7714}, {"HSDT11B", 4.2602},
         {"HSDT9", 4.2554}, {"TSDT7", 4.5394}, {"FSDT5", 4.4561}}}},
      {5.0, "FG", 500.0,
       {{{"HSDT13", 3.4910}, {"HSDT11A", 3.4809}, {"HSDT11B", 4.0277},
         {"HSDT9", 4.0232}, {"TSDT7", 4.3657}, {"FSDT5", 4.2801}}}},
      {10.0, "UD", 300.0,
       {{{"HSDT13", 4.4397}, {"HSDT11A", 4.4373}, {"HSDT11B", 4.6095},
         {"HSDT9", 4.6078}, {"TSDT7", 4.6655}, {"FSDT5", 4.6426}}}},
      {10.0, "UD", 500.0,
       {{{"HSDT13", 4.2129}, {"HSDT11A", 4.2105}, {"HSDT11B", 4.4305},
         {"HSDT9", 4.4291}, {"TSDT7", 4.5034}, {"FSDT5", 4.4795}}}},
      {10.0, "FG", 300.0,
       {{{"HSDT13", 4.5719}, {"HSDT11A", 4.5688}, {"HSDT11B", 4.8382},
         {"HSDT9", 4.8364}, {"TSDT7", 4.9522}, {"FSDT5", 4.9238}}}},
      {10.0, "FG", 500.0,
       {{{"HSDT13", 4.3092}, {"HSDT11A", 4.3063}, {"HSDT11B", 4.6441},
         {"HSDT9", 4.6427}, {"TSDT7", 4.7899}, {"FSDT5", 4.7602}}}},
  }};
  return g;
}

const Tolerances& tolerances() {
  static const Tolerances t;
  return t;
}

double row_value(const StaticRow& row, const std::string& quantity) {
  if (quantity == "u") return row.u;
  if (quantity == "w") return row.w;
  if (quantity == "sxx") return row.sxx;
  if (quantity == "sxz") return row.sxz;
  throw std::invalid_argument("goldens: unknown quantity " + quantity);
}

}  // namespace sandplate::goldens
