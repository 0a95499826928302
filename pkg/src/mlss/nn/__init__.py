from mlss.nn.activations import ess, ess_derivative, softmax
from mlss.nn.losses import cross_entropy_loss, mae_loss
from mlss.nn.network import (
    Activation,
    ForwardTrace,
    LayerSpec,
    NetworkModel,
    backprop,
    batch_loss_and_grad,
    flatten_params,
    forward,
    set_params,
)
from mlss.nn.oss import OssState, TrainingDivergedError, oss_step

__all__ = [
    "Activation",
    "LayerSpec",
    "NetworkModel",
    "ForwardTrace",
    "OssState",
    "TrainingDivergedError",
    "softmax",
    "ess",
    "ess_derivative",
    "cross_entropy_loss",
    "mae_loss",
    "forward",
    "backprop",
    "batch_loss_and_grad",
    "flatten_params",
    "set_params",
    "oss_step",
]
