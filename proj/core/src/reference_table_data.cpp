#include "bsppcc/mc_tables.hpp"

// Reference critical values of the probability-plot correlation statistic for
// the Birnbaum-Saunders family, precomputed by Monte Carlo with 1e8 replicates
// per sample size. Stored as r * 1e4; see reference_table() for the levels.

namespace bsppcc::detail {

const ReferenceRow kReferenceRows[108] = {
    {   3, {7208, 7445, 7727, 7831, 8203, 8467, 8689, 8884, 9044, 9273, 9425, 9787}},
    {   4, {6998, 7417, 7898, 8065, 8574, 8787, 8921, 9027, 9117, 9270, 9394, 9728}},
    {   5, {7508, 7889, 8250, 8367, 8742, 8965, 9106, 9197, 9265, 9371, 9458, 9725}},
    {   6, {7878, 8211, 8535, 8633, 8927, 9098, 9217, 9304, 9368, 9457, 9523, 9736}},
    {   7, {8188, 8463, 8736, 8823, 9074, 9213, 9310, 9382, 9438, 9519, 9575, 9751}},
    {   8, {8422, 8660, 8891, 8965, 9185, 9303, 9384, 9445, 9493, 9564, 9615, 9766}},
    {   9, {8602, 8812, 9015, 9079, 9271, 9375, 9445, 9497, 9538, 9600, 9645, 9779}},
    {  10, {8746, 8932, 9113, 9169, 9339, 9432, 9493, 9538, 9575, 9629, 9670, 9791}},
    {  11, {8836, 9002, 9165, 9216, 9370, 9456, 9513, 9556, 9591, 9643, 9682, 9799}},
    {  12, {8930, 9082, 9230, 9277, 9417, 9495, 9547, 9586, 9617, 9664, 9700, 9809}},
    {  13, {9011, 9150, 9285, 9328, 9456, 9528, 9575, 9611, 9639, 9683, 9716, 9818}},
    {  14, {9079, 9207, 9333, 9372, 9490, 9555, 9599, 9632, 9658, 9699, 9730, 9826}},
    {  15, {9137, 9257, 9373, 9410, 9519, 9579, 9620, 9651, 9675, 9713, 9742, 9833}},
    {  16, {9189, 9300, 9409, 9443, 9544, 9600, 9638, 9667, 9690, 9725, 9753, 9840}},
    {  17, {9234, 9338, 9440, 9472, 9566, 9618, 9654, 9681, 9703, 9737, 9763, 9846}},
    {  18, {9273, 9372, 9467, 9497, 9586, 9634, 9668, 9694, 9714, 9747, 9772, 9851}},
    {  19, {9309, 9402, 9492, 9519, 9603, 9649, 9681, 9705, 9725, 9756, 9780, 9856}},
    {  20, {9341, 9429, 9513, 9539, 9618, 9662, 9692, 9716, 9735, 9764, 9787, 9861}},
    {  21, {9370, 9453, 9532, 9557, 9631, 9673, 9703, 9725, 9743, 9772, 9794, 9865}},
    {  22, {9396, 9474, 9550, 9573, 9644, 9684, 9712, 9734, 9752, 9779, 9801, 9869}},
    {  23, {9419, 9494, 9565, 9587, 9655, 9694, 9721, 9742, 9759, 9786, 9807, 9873}},
    {  24, {9440, 9511, 9579, 9600, 9665, 9703, 9729, 9750, 9766, 9792, 9812, 9876}},
    {  25, {9459, 9527, 9591, 9612, 9675, 9711, 9737, 9756, 9773, 9798, 9817, 9880}},
    {  26, {9477, 9541, 9603, 9622, 9683, 9719, 9744, 9763, 9779, 9803, 9822, 9883}},
    {  27, {9493, 9554, 9613, 9632, 9692, 9726, 9750, 9769, 9784, 9808, 9827, 9886}},
    {  28, {9507, 9566, 9623, 9642, 9699, 9733, 9756, 9775, 9790, 9813, 9831, 9888}},
    {  29, {9520, 9576, 9632, 9650, 9706, 9739, 9762, 9780, 9795, 9818, 9835, 9891}},
    {  30, {9532, 9586, 9640, 9658, 9713, 9745, 9768, 9785, 9799, 9822, 9839, 9893}},
    {  31, {9543, 9595, 9648, 9665, 9719, 9751, 9773, 9790, 9804, 9826, 9842, 9896}},
    {  32, {9553, 9604, 9656, 9672, 9725, 9756, 9778, 9795, 9808, 9829, 9846, 9898}},
    {  33, {9562, 9612, 9662, 9679, 9731, 9761, 9782, 9799, 9812, 9833, 9849, 9900}},
    {  34, {9570, 9619, 9669, 9685, 9736, 9766, 9787, 9803, 9816, 9836, 9852, 9902}},
    {  35, {9578, 9626, 9675, 9691, 9741, 9771, 9791, 9807, 9820, 9840, 9855, 9904}},
    {  36, {9585, 9632, 9681, 9697, 9746, 9775, 9795, 9811, 9823, 9843, 9858, 9906}},
    {  37, {9592, 9638, 9687, 9702, 9751, 9779, 9799, 9814, 9826, 9846, 9860, 9907}},
    {  38, {9599, 9644, 9692, 9707, 9755, 9783, 9802, 9817, 9830, 9848, 9863, 9909}},
    {  39, {9605, 9650, 9697, 9712, 9759, 9787, 9806, 9821, 9833, 9851, 9865, 9911}},
    {  40, {9610, 9655, 9702, 9717, 9763, 9790, 9809, 9824, 9835, 9854, 9868, 9912}},
    {  41, {9616, 9660, 9706, 9721, 9767, 9794, 9812, 9827, 9838, 9856, 9870, 9914}},
    {  42, {9621, 9665, 9711, 9725, 9771, 9797, 9816, 9830, 9841, 9859, 9872, 9915}},
    {  43, {9625, 9670, 9715, 9729, 9775, 9800, 9818, 9832, 9843, 9861, 9874, 9916}},
    {  44, {9630, 9674, 9719, 9733, 9778, 9804, 9821, 9835, 9846, 9863, 9876, 9918}},
    {  45, {9634, 9678, 9723, 9737, 9781, 9806, 9824, 9837, 9848, 9865, 9878, 9919}},
    {  46, {9639, 9682, 9726, 9741, 9784, 9809, 9827, 9840, 9851, 9867, 9880, 9920}},
    {  47, {9642, 9686, 9730, 9744, 9787, 9812, 9829, 9842, 9853, 9869, 9882, 9921}},
    {  48, {9646, 9690, 9733, 9747, 9790, 9815, 9832, 9844, 9855, 9871, 9883, 9922}},
    {  49, {9650, 9693, 9737, 9751, 9793, 9817, 9834, 9847, 9857, 9873, 9885, 9923}},
    {  50, {9653, 9697, 9740, 9754, 9796, 9820, 9836, 9849, 9859, 9875, 9887, 9924}},
    {  55, {9669, 9712, 9755, 9768, 9808, 9831, 9846, 9858, 9868, 9883, 9894, 9929}},
    {  60, {9683, 9725, 9767, 9780, 9819, 9841, 9855, 9867, 9876, 9890, 9900, 9933}},
    {  65, {9694, 9737, 9778, 9791, 9828, 9849, 9863, 9874, 9882, 9896, 9906, 9937}},
    {  70, {9704, 9747, 9787, 9800, 9836, 9856, 9870, 9880, 9888, 9901, 9910, 9940}},
    {  75, {9713, 9756, 9796, 9808, 9844, 9863, 9876, 9886, 9894, 9906, 9915, 9943}},
    {  80, {9721, 9764, 9804, 9815, 9850, 9869, 9881, 9891, 9898, 9910, 9919, 9946}},
    {  85, {9728, 9771, 9810, 9822, 9856, 9874, 9886, 9895, 9902, 9914, 9922, 9948}},
    {  90, {9735, 9778, 9817, 9828, 9861, 9879, 9891, 9899, 9906, 9917, 9925, 9950}},
    {  95, {9742, 9784, 9823, 9834, 9866, 9883, 9895, 9903, 9910, 9920, 9928, 9952}},
    { 100, {9747, 9790, 9828, 9839, 9871, 9887, 9898, 9906, 9913, 9923, 9930, 9954}},
    { 110, {9758, 9800, 9837, 9848, 9879, 9894, 9905, 9913, 9919, 9928, 9935, 9957}},
    { 120, {9768, 9809, 9846, 9856, 9885, 9900, 9910, 9918, 9924, 9932, 9939, 9959}},
    { 130, {9776, 9817, 9853, 9863, 9891, 9906, 9915, 9922, 9928, 9936, 9942, 9961}},
    { 140, {9784, 9824, 9859, 9869, 9897, 9911, 9920, 9926, 9931, 9939, 9945, 9964}},
    { 150, {9791, 9831, 9865, 9875, 9901, 9915, 9923, 9930, 9935, 9942, 9948, 9965}},
    { 160, {9798, 9837, 9870, 9880, 9906, 9918, 9927, 9933, 9938, 9945, 9950, 9967}},
    { 170, {9804, 9842, 9875, 9884, 9909, 9922, 9930, 9936, 9940, 9947, 9953, 9968}},
    { 180, {9810, 9848, 9880, 9889, 9913, 9925, 9933, 9938, 9943, 9950, 9955, 9970}},
    { 190, {9816, 9852, 9884, 9892, 9916, 9928, 9935, 9941, 9945, 9951, 9956, 9971}},
    { 200, {9821, 9857, 9887, 9896, 9919, 9930, 9938, 9943, 9947, 9953, 9958, 9972}},
    { 210, {9826, 9861, 9891, 9899, 9922, 9933, 9940, 9945, 9949, 9955, 9959, 9973}},
    { 220, {9830, 9865, 9894, 9902, 9924, 9935, 9942, 9947, 9951, 9956, 9961, 9974}},
    { 230, {9834, 9868, 9897, 9905, 9927, 9937, 9944, 9948, 9952, 9958, 9962, 9975}},
    { 240, {9838, 9871, 9900, 9908, 9929, 9939, 9945, 9950, 9954, 9959, 9963, 9975}},
    { 250, {9842, 9875, 9902, 9910, 9931, 9941, 9947, 9951, 9955, 9960, 9964, 9976}},
    { 260, {9846, 9878, 9905, 9913, 9933, 9942, 9948, 9953, 9956, 9961, 9965, 9977}},
    { 270, {9849, 9881, 9907, 9915, 9934, 9944, 9950, 9954, 9958, 9963, 9966, 9977}},
    { 280, {9852, 9883, 9910, 9917, 9936, 9945, 9951, 9955, 9959, 9964, 9967, 9978}},
    { 290, {9856, 9886, 9912, 9919, 9938, 9947, 9952, 9957, 9960, 9964, 9968, 9979}},
    { 300, {9859, 9888, 9914, 9921, 9939, 9948, 9954, 9958, 9961, 9965, 9969, 9979}},
    { 310, {9862, 9891, 9916, 9922, 9941, 9949, 9955, 9959, 9962, 9966, 9970, 9980}},
    { 320, {9864, 9893, 9917, 9924, 9942, 9950, 9956, 9960, 9963, 9967, 9970, 9980}},
    { 330, {9867, 9895, 9919, 9926, 9943, 9951, 9957, 9960, 9963, 9968, 9971, 9981}},
    { 340, {9870, 9897, 9921, 9927, 9944, 9953, 9958, 9961, 9964, 9968, 9972, 9981}},
    { 350, {9872, 9899, 9922, 9929, 9946, 9954, 9959, 9962, 9965, 9969, 9972, 9981}},
    { 360, {9874, 9901, 9924, 9930, 9947, 9954, 9959, 9963, 9966, 9970, 9973, 9982}},
    { 370, {9877, 9903, 9925, 9931, 9948, 9955, 9960, 9964, 9966, 9970, 9973, 9982}},
    { 380, {9879, 9905, 9927, 9933, 9949, 9956, 9961, 9964, 9967, 9971, 9974, 9983}},
    { 390, {9881, 9906, 9928, 9934, 9950, 9957, 9962, 9965, 9968, 9972, 9974, 9983}},
    { 400, {9883, 9908, 9929, 9935, 9951, 9958, 9962, 9966, 9968, 9972, 9975, 9983}},
    { 410, {9885, 9909, 9930, 9936, 9951, 9959, 9963, 9966, 9969, 9973, 9975, 9984}},
    { 420, {9886, 9911, 9932, 9937, 9952, 9959, 9964, 9967, 9969, 9973, 9976, 9984}},
    { 430, {9888, 9912, 9933, 9938, 9953, 9960, 9964, 9968, 9970, 9974, 9976, 9984}},
    { 440, {9890, 9914, 9934, 9939, 9954, 9961, 9965, 9968, 9971, 9974, 9977, 9984}},
    { 450, {9892, 9915, 9935, 9940, 9955, 9961, 9966, 9969, 9971, 9975, 9977, 9985}},
    { 460, {9893, 9916, 9936, 9941, 9955, 9962, 9966, 9969, 9972, 9975, 9977, 9985}},
    { 470, {9895, 9918, 9937, 9942, 9956, 9963, 9967, 9970, 9972, 9975, 9978, 9985}},
    { 480, {9896, 9919, 9938, 9943, 9957, 9963, 9967, 9970, 9972, 9976, 9978, 9985}},
    { 490, {9898, 9920, 9939, 9944, 9957, 9964, 9968, 9971, 9973, 9976, 9979, 9986}},
    { 500, {9899, 9921, 9940, 9945, 9958, 9964, 9968, 9971, 9973, 9976, 9979, 9986}},
    { 550, {9906, 9926, 9944, 9948, 9961, 9967, 9971, 9973, 9975, 9978, 9980, 9987}},
    { 600, {9912, 9931, 9947, 9952, 9963, 9969, 9972, 9975, 9977, 9980, 9982, 9988}},
    { 650, {9917, 9935, 9950, 9955, 9966, 9971, 9974, 9976, 9978, 9981, 9983, 9988}},
    { 700, {9921, 9938, 9953, 9957, 9968, 9972, 9976, 9978, 9979, 9982, 9984, 9989}},
    { 750, {9925, 9942, 9955, 9959, 9969, 9974, 9977, 9979, 9980, 9983, 9985, 9990}},
    { 800, {9929, 9944, 9958, 9961, 9971, 9975, 9978, 9980, 9981, 9984, 9985, 9990}},
    { 850, {9932, 9947, 9959, 9963, 9972, 9976, 9979, 9981, 9982, 9984, 9986, 9991}},
    { 900, {9935, 9949, 9961, 9965, 9973, 9977, 9980, 9982, 9983, 9985, 9987, 9991}},
    { 950, {9938, 9951, 9963, 9966, 9974, 9978, 9981, 9982, 9984, 9986, 9987, 9991}},
    {1000, {9940, 9953, 9964, 9967, 9975, 9979, 9981, 9983, 9984, 9986, 9988, 9992}},
};

const std::size_t kReferenceRowCount = 108;
const std::uint64_t kReferenceChecksum = 0xb98b645d11f200d7ULL;

}  // namespace bsppcc::detail
