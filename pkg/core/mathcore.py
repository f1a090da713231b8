#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Matematik Çekirdeği
Yoğun vektör/matris işlemleri ve ters yönlü otomatik türev (teyp tabanlı).

Türevlenebilir her büyüklük bu modüldeki Tape işlemlerinden geçer. Değerler
64 bit kayan noktalı numpy dizilerinde tutulur; en fazla 2 boyut desteklenir.

Kullanım:
```
params = ParameterCollection()
W = params.uniform("W", (3, 4), rng)
tape = Tape(params)
loss = tape.sum(tape.tanh(tape.matvec(W, x)))
tape.backward(loss)
W.grad  # ∂loss/∂W
```
"""

import logging
import math

import numpy as np

from utils.errors import ShapeError, DomainError, UsageError

# Modül için logger
logger = logging.getLogger(__name__)


class Tensor:
    """Türev kaydı tutulabilen yoğun tensör (skaler, vektör veya matris)"""

    __slots__ = ("value", "grad", "requires_grad", "name")

    def __init__(self, value, requires_grad=False, name=None):
        """Tensör başlatıcı

        Args:
            value: Sayı, liste veya numpy dizisi (kopyalanır)
            requires_grad: Türev biriktirilsin mi
            name: İsteğe bağlı ad (parametreler için)
        """
        value = np.array(value, dtype=np.float64)
        if value.ndim > 2:
            raise ShapeError(f"En fazla 2 boyutlu tensör desteklenir, alınan: {value.shape}")
        self.value = value
        self.requires_grad = requires_grad
        self.grad = np.zeros_like(value) if requires_grad else None
        self.name = name

    @classmethod
    def _wrap(cls, value, requires_grad):
        """Kopyalamadan tensör oluştur (iç kullanım)"""
        tensor = cls.__new__(cls)
        tensor.value = value
        tensor.requires_grad = requires_grad
        tensor.grad = None
        tensor.name = None
        return tensor

    @property
    def shape(self):
        return self.value.shape

    @property
    def size(self):
        return self.value.size

    def item(self):
        """Tek elemanlı tensörün değerini float olarak döndür"""
        if self.value.size != 1:
            raise ShapeError(f"item() yalnızca tek elemanlı tensörlerde kullanılır: {self.value.shape}")
        return float(self.value.reshape(-1)[0])

    def numpy(self):
        """Değerin bir kopyasını döndür"""
        return self.value.copy()

    def __len__(self):
        if self.value.ndim == 0:
            raise ShapeError("Skaler tensörün uzunluğu yoktur")
        return self.value.shape[0]

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"Tensor{label}(shape={self.value.shape}, requires_grad={self.requires_grad})"


class Parameter(Tensor):
    """Eğitilebilir parametre; türev tamponu her zaman ayrılmıştır"""

    __slots__ = ()

    def __init__(self, value, name):
        super().__init__(value, requires_grad=True, name=name)

    def zero_grad(self):
        """Türev tamponunu sıfırla"""
        self.grad.fill(0.0)


def uniform_init(rng, shape, fan_in=None):
    """[-√(3/d), +√(3/d)] aralığında düzgün dağılımlı başlangıç değerleri

    Args:
        rng: numpy.random.Generator
        shape: Dizi şekli
        fan_in: Giriş boyutu d (None ise son eksenin boyutu)

    Returns:
        numpy.ndarray: Başlangıç değerleri
    """
    shape = tuple(shape)
    if fan_in is None:
        fan_in = shape[-1] if shape else 1
    bound = math.sqrt(3.0 / max(fan_in, 1))
    return rng.uniform(-bound, bound, size=shape)


class ParameterCollection:
    """Ada göre eğitilebilir parametre kayıt defteri"""

    def __init__(self):
        self._params = {}

    def add(self, name, value):
        """Verilen değerle parametre ekle

        Args:
            name: Benzersiz parametre adı
            value: Başlangıç değeri

        Returns:
            Parameter: Eklenen parametre
        """
        if name in self._params:
            raise UsageError(f"Parametre zaten kayıtlı: {name}")
        param = Parameter(value, name)
        self._params[name] = param
        return param

    def uniform(self, name, shape, rng, fan_in=None):
        """Düzgün dağılımla başlatılmış parametre ekle"""
        return self.add(name, uniform_init(rng, shape, fan_in))

    def zeros(self, name, shape):
        """Sıfırla başlatılmış parametre ekle"""
        return self.add(name, np.zeros(tuple(shape)))

    def __getitem__(self, name):
        return self._params[name]

    def __contains__(self, name):
        return name in self._params

    def __iter__(self):
        return iter(self._params.values())

    def __len__(self):
        return len(self._params)

    def names(self):
        return list(self._params.keys())

    def items(self):
        return list(self._params.items())

    def zero_grad(self):
        """Tüm türev tamponlarını sıfırla"""
        for param in self._params.values():
            param.zero_grad()

    def global_norm(self):
        """Tüm türevlerin birleşik L2 normu"""
        total = 0.0
        for param in self._params.values():
            total += float(np.sum(param.grad * param.grad))
        return math.sqrt(total)

    def state_dict(self):
        """Parametre değerlerinin kopyasını sözlük olarak döndür"""
        return {name: param.value.copy() for name, param in self._params.items()}

    def load_state_dict(self, state):
        """Kayıtlı değerleri parametrelere yükle

        Args:
            state: {ad: numpy dizisi} sözlüğü

        Raises:
            UsageError: Eksik parametre
            ShapeError: Şekil uyuşmazlığı
        """
        for name, param in self._params.items():
            if name not in state:
                raise UsageError(f"Parametre değeri eksik: {name}")
            value = np.asarray(state[name], dtype=np.float64)
            if value.shape != param.value.shape:
                raise ShapeError(f"{name} için şekil uyuşmuyor: {value.shape} != {param.value.shape}")
            param.value[...] = value


class _Node:
    """Teypteki tek işlem kaydı"""

    __slots__ = ("output", "inputs", "backward")

    def __init__(self, output, inputs, backward):
        self.output = output
        self.inputs = inputs
        self.backward = backward


def _check_same_shape(op, *tensors):
    shape = tensors[0].value.shape
    for tensor in tensors[1:]:
        if tensor.value.shape != shape:
            raise ShapeError(f"{op}: şekiller uyuşmuyor {shape} != {tensor.value.shape}")


def _stable_sigmoid(x):
    return 0.5 * (1.0 + np.tanh(0.5 * x))


def _logsumexp(values, axis=None):
    peak = np.max(values, axis=axis, keepdims=True)
    total = np.log(np.sum(np.exp(values - peak), axis=axis, keepdims=True)) + peak
    if axis is None:
        return total.reshape(())
    return np.squeeze(total, axis=axis)


class Tape:
    """Ters yönlü türev kaydedici

    İşlemler yalnızca türev gerektiren bir girdileri varsa kaydedilir. Bir teyp
    tek bir eğitim örneği içindir ve yalnızca bir kez geri yayılabilir.
    """

    def __init__(self, parameters=None, record=True):
        """Teyp başlatıcı

        Args:
            parameters: ParameterCollection (türevlerin biriktiği kayıt defteri)
            record: False ise hiçbir işlem kaydedilmez (çıkarım modu)
        """
        self.parameters = parameters
        self.record = record
        self.nodes = []
        self._outputs = set()
        self._consumed = False

    def _emit(self, value, inputs, backward):
        needs_grad = self.record and any(t.requires_grad for t in inputs)
        out = Tensor._wrap(value, needs_grad)
        if needs_grad:
            self.nodes.append(_Node(out, inputs, backward))
            self._outputs.add(id(out))
        return out

    def constant(self, value):
        """Türev gerektirmeyen sabit tensör"""
        return Tensor._wrap(np.asarray(value, dtype=np.float64), False)

    # Doğrusal cebir

    def matvec(self, M, v):
        """Matris-vektör çarpımı M·v"""
        if M.value.ndim != 2 or v.value.ndim != 1:
            raise ShapeError(f"matvec: matris ve vektör bekleniyor, alınan {M.shape} ve {v.shape}")
        if M.value.shape[1] != v.value.shape[0]:
            raise ShapeError(f"matvec: iç boyutlar uyuşmuyor {M.shape} · {v.shape}")
        m_val, v_val = M.value, v.value

        def backward(g):
            return np.outer(g, v_val), m_val.T @ g

        return self._emit(m_val @ v_val, (M, v), backward)

    def add(self, *tensors):
        """Eleman bazında toplam (aynı şekilli tensörler)"""
        _check_same_shape("add", *tensors)
        value = tensors[0].value.copy()
        for tensor in tensors[1:]:
            value += tensor.value
        count = len(tensors)
        return self._emit(value, tensors, lambda g: (g,) * count)

    def sub(self, a, b):
        """Eleman bazında fark a − b"""
        _check_same_shape("sub", a, b)
        return self._emit(a.value - b.value, (a, b), lambda g: (g, -g))

    def hadamard(self, a, b):
        """Eleman bazında çarpım a ⊙ b"""
        _check_same_shape("hadamard", a, b)
        a_val, b_val = a.value, b.value
        return self._emit(a_val * b_val, (a, b), lambda g: (g * b_val, g * a_val))

    def scale(self, x, factor):
        """Sabit bir sayıyla çarpım"""
        factor = float(factor)
        return self._emit(x.value * factor, (x,), lambda g: (g * factor,))

    def dot(self, a, b):
        """İç çarpım (skaler)"""
        _check_same_shape("dot", a, b)
        a_val, b_val = a.value, b.value
        return self._emit(np.asarray(np.sum(a_val * b_val)), (a, b), lambda g: (g * b_val, g * a_val))

    def sum(self, x):
        """Tüm elemanların toplamı (skaler)"""
        shape = x.value.shape
        return self._emit(np.asarray(np.sum(x.value)), (x,), lambda g: (np.full(shape, float(g)),))

    # Doğrusal olmayan işlemler

    def sigmoid(self, x):
        s = _stable_sigmoid(x.value)
        return self._emit(s, (x,), lambda g: (g * s * (1.0 - s),))

    def tanh(self, x):
        t = np.tanh(x.value)
        return self._emit(t, (x,), lambda g: (g * (1.0 - t * t),))

    def relu(self, x):
        active = x.value > 0.0
        return self._emit(np.where(active, x.value, 0.0), (x,), lambda g: (g * active,))

    def logsumexp(self, x, axis=None):
        """log Σ exp(x), en büyük değere göre kaydırılarak hesaplanır

        Args:
            x: Vektör (axis=None) veya matris
            axis: Matrislerde indirgeme ekseni (None ise tüm elemanlar)

        Returns:
            Tensor: axis=None için skaler, aksi halde vektör

        Raises:
            DomainError: Boş girdi
        """
        if x.value.size == 0:
            raise DomainError("logsumexp boş girdi üzerinde tanımlı değil")
        values = x.value
        out = _logsumexp(values, axis)

        def backward(g):
            if axis is None:
                return (np.exp(values - out) * g,)
            expanded = np.expand_dims(out, axis)
            return (np.exp(values - expanded) * np.expand_dims(g, axis),)

        return self._emit(out, (x,), backward)

    def log_softmax(self, x):
        """Vektör için log-softmax"""
        if x.value.ndim != 1 or x.value.size == 0:
            raise DomainError(f"log_softmax boş olmayan vektör bekler: {x.shape}")
        out = x.value - _logsumexp(x.value)
        probs = np.exp(out)
        return self._emit(out, (x,), lambda g: (g - probs * np.sum(g),))

    # Yapısal işlemler

    def concat(self, *tensors):
        """Vektörleri uç uca ekle"""
        for tensor in tensors:
            if tensor.value.ndim != 1:
                raise ShapeError(f"concat yalnızca vektörleri birleştirir: {tensor.shape}")
        sizes = [t.value.shape[0] for t in tensors]
        offsets = np.cumsum([0] + sizes)

        def backward(g):
            return tuple(g[offsets[i]:offsets[i + 1]] for i in range(len(sizes)))

        return self._emit(np.concatenate([t.value for t in tensors]), tensors, backward)

    def stack(self, tensors):
        """Eşit uzunluklu vektörleri satır olarak matrise diz"""
        if not tensors:
            raise DomainError("stack boş liste üzerinde tanımlı değil")
        _check_same_shape("stack", *tensors)
        if tensors[0].value.ndim != 1:
            raise ShapeError("stack yalnızca vektörleri dizer")
        count = len(tensors)
        return self._emit(np.stack([t.value for t in tensors]), tuple(tensors),
                          lambda g: tuple(g[i] for i in range(count)))

    def index(self, x, key):
        """numpy indeksleme (satır seçimi, tek eleman, alt matris)

        Args:
            x: Kaynak tensör
            key: int, dilim, indeks dizisi veya bunların demeti

        Returns:
            Tensor: x.value[key] değerli tensör
        """
        try:
            value = np.array(x.value[key], dtype=np.float64)
        except IndexError as e:
            raise DomainError(f"Geçersiz indeks {key!r}: {e}")
        shape = x.value.shape

        def backward(g):
            full = np.zeros(shape)
            np.add.at(full, key, g)
            return (full,)

        return self._emit(value, (x,), backward)

    def outer_add(self, u, v):
        """M[i, j] = u[i] + v[j]"""
        if u.value.ndim != 1 or v.value.ndim != 1:
            raise ShapeError("outer_add iki vektör bekler")
        value = u.value[:, None] + v.value[None, :]
        return self._emit(value, (u, v), lambda g: (g.sum(axis=1), g.sum(axis=0)))

    # Geri yayılım

    def backward(self, loss):
        """Kayıttan geriye doğru zincir kuralını uygula

        Args:
            loss: Bu teypte kaydedilmiş skaler düğüm

        Returns:
            dict: {parametre adı: türev dizisi} (parametre kaydı yoksa boş)

        Raises:
            UsageError: Kayıp teypte değil, skaler değil veya teyp zaten kullanıldı
        """
        if self._consumed:
            raise UsageError("Teyp yalnızca bir kez geri yayılabilir")
        if id(loss) not in self._outputs:
            raise UsageError("Kayıp bu teypte kaydedilmiş bir düğüm değil")
        if loss.value.size != 1:
            raise UsageError(f"Kayıp skaler olmalıdır: {loss.shape}")
        self._consumed = True

        loss.grad = np.ones_like(loss.value)
        for node in reversed(self.nodes):
            g = node.output.grad
            if g is None:
                continue
            for tensor, contribution in zip(node.inputs, node.backward(g)):
                if contribution is None or not tensor.requires_grad:
                    continue
                if tensor.grad is None:
                    tensor.grad = np.array(contribution, dtype=np.float64).reshape(tensor.value.shape)
                else:
                    tensor.grad += np.reshape(contribution, tensor.value.shape)

        if self.parameters is None:
            return {}
        return {name: param.grad for name, param in self.parameters.items()}


def numerical_gradient(loss_fn, tensor, h=1e-5):
    """Merkezi sonlu farklarla türev tahmini

    Args:
        loss_fn: Argümansız, float kayıp döndüren fonksiyon
        tensor: Değeri yerinde değiştirilecek tensör
        h: Adım büyüklüğü

    Returns:
        numpy.ndarray: tensor ile aynı şekilli türev tahmini
    """
    grad = np.zeros_like(tensor.value)
    flat_value = tensor.value.reshape(-1)
    flat_grad = grad.reshape(-1)
    for i in range(flat_value.size):
        original = flat_value[i]
        flat_value[i] = original + h
        plus = loss_fn()
        flat_value[i] = original - h
        minus = loss_fn()
        flat_value[i] = original
        flat_grad[i] = (plus - minus) / (2.0 * h)
    return grad


def gradient_relative_error(analytic, numeric, floor=1e-3):
    """Koordinat bazında en büyük göreli hata

    Payda max(|a|, |n|, floor) alınır; sıfıra yakın türevlerde yuvarlama
    gürültüsü hatayı şişirmez.
    """
    analytic = np.asarray(analytic, dtype=np.float64)
    numeric = np.asarray(numeric, dtype=np.float64)
    denominator = np.maximum(np.maximum(np.abs(analytic), np.abs(numeric)), floor)
    if analytic.size == 0:
        return 0.0
    return float(np.max(np.abs(analytic - numeric) / denominator))
